#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace turan {

// Undirected simple graph on at most 64 vertices, one neighbor bitmask per
// vertex.  Vertices are 0-indexed.  Values are immutable once built; all
// operations below return fresh graphs.
struct SmallGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    bool has_edge(int u, int v) const { return adj[u] >> v & 1; }
    int degree(int v) const { return std::popcount(adj[v]); }
    int edge_count() const;
    std::uint64_t full_mask() const { return n == 64 ? ~0ull : (1ull << n) - 1; }
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const SmallGraph&) const = default;
};

// Rejects n outside [0, 64], loops, and out-of-range endpoints.  Duplicate
// edges collapse silently.
SmallGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

SmallGraph with_edge(const SmallGraph& g, int u, int v);

// New graph on the vertices selected by mask, relabeled to 0..popcount-1 in
// increasing original order.
SmallGraph induced_subgraph(const SmallGraph& g, std::uint64_t mask);

// b's vertices are shifted up by a.n; rejects combined size above 64.
SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b);

// Appends isolated vertices up to m vertices total; rejects m < g.n.
SmallGraph pad_to(const SmallGraph& g, int m);

// Appends one vertex adjacent to exactly the vertices in neighbors.
SmallGraph add_vertex(const SmallGraph& g, std::uint64_t neighbors);

bool contains_clique(const SmallGraph& g, int r);

// Connected component masks, ordered by smallest contained vertex.
std::vector<std::uint64_t> component_masks(const SmallGraph& g);

bool is_complete(const SmallGraph& g);
bool is_edgeless(const SmallGraph& g);

SmallGraph complete_graph(int n);
SmallGraph path_graph(int n);
SmallGraph cycle_graph(int n);
SmallGraph empty_graph(int n);

} // namespace turan
