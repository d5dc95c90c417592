#include "turanlab/graph.hpp"

#include "turanlab/error.hpp"

#include <string>

namespace turan {

int SmallGraph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<std::pair<int, int>> SmallGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u) {
        std::uint64_t higher = adj[u] >> (u + 1) << (u + 1);
        while (higher) {
            int v = std::countr_zero(higher);
            higher &= higher - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

SmallGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0 || n > 64)
        throw error(errc::size_cap, "vertex count " + std::to_string(n) + " outside [0, 64]");
    SmallGraph g;
    g.n = n;
    g.adj.assign(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw error(errc::invalid_argument,
                        "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") out of range for n = " + std::to_string(n));
        if (u == v)
            throw error(errc::invalid_argument, "loop at vertex " + std::to_string(u));
        g.adj[u] |= 1ull << v;
        g.adj[v] |= 1ull << u;
    }
    return g;
}

SmallGraph with_edge(const SmallGraph& g, int u, int v) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n || u == v)
        throw error(errc::invalid_argument, "invalid edge endpoints");
    SmallGraph out = g;
    out.adj[u] |= 1ull << v;
    out.adj[v] |= 1ull << u;
    return out;
}

SmallGraph induced_subgraph(const SmallGraph& g, std::uint64_t mask) {
    mask &= g.full_mask();
    std::vector<int> keep;
    for (std::uint64_t m = mask; m; m &= m - 1) keep.push_back(std::countr_zero(m));
    SmallGraph out;
    out.n = static_cast<int>(keep.size());
    out.adj.assign(out.n, 0);
    for (int i = 0; i < out.n; ++i)
        for (int j = i + 1; j < out.n; ++j)
            if (g.has_edge(keep[i], keep[j])) {
                out.adj[i] |= 1ull << j;
                out.adj[j] |= 1ull << i;
            }
    return out;
}

SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b) {
    if (a.n + b.n > 64)
        throw error(errc::size_cap, "disjoint union exceeds 64 vertices");
    SmallGraph out;
    out.n = a.n + b.n;
    out.adj = a.adj;
    out.adj.resize(out.n, 0);
    for (int v = 0; v < b.n; ++v) out.adj[a.n + v] = b.adj[v] << a.n;
    return out;
}

SmallGraph pad_to(const SmallGraph& g, int m) {
    if (m < g.n)
        throw error(errc::invalid_argument, "cannot pad " + std::to_string(g.n) +
                                                " vertices down to " + std::to_string(m));
    if (m > 64) throw error(errc::size_cap, "padding exceeds 64 vertices");
    SmallGraph out = g;
    out.n = m;
    out.adj.resize(m, 0);
    return out;
}

SmallGraph add_vertex(const SmallGraph& g, std::uint64_t neighbors) {
    if (g.n + 1 > 64) throw error(errc::size_cap, "add_vertex exceeds 64 vertices");
    if (neighbors & ~g.full_mask())
        throw error(errc::invalid_argument, "neighbor mask references missing vertices");
    SmallGraph out = g;
    out.n = g.n + 1;
    out.adj.push_back(neighbors);
    for (std::uint64_t m = neighbors; m; m &= m - 1) out.adj[std::countr_zero(m)] |= 1ull << g.n;
    return out;
}

namespace {

// Candidates are restricted to indices above the last chosen vertex, so every
// clique is visited once.
bool clique_search(const SmallGraph& g, std::uint64_t cand, int need) {
    if (need == 0) return true;
    while (cand) {
        if (std::popcount(cand) < need) return false;
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        if (clique_search(g, cand & g.adj[v], need - 1)) return true;
    }
    return false;
}

} // namespace

bool contains_clique(const SmallGraph& g, int r) {
    if (r <= 0) return true;
    if (r > g.n) return false;
    return clique_search(g, g.full_mask(), r);
}

std::vector<std::uint64_t> component_masks(const SmallGraph& g) {
    std::vector<std::uint64_t> out;
    std::uint64_t seen = 0;
    for (int v = 0; v < g.n; ++v) {
        if (seen >> v & 1) continue;
        std::uint64_t comp = 1ull << v;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m; m &= m - 1) next |= g.adj[std::countr_zero(m)];
            frontier = next & ~comp;
            comp |= frontier;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

bool is_complete(const SmallGraph& g) {
    return g.edge_count() == g.n * (g.n - 1) / 2;
}

bool is_edgeless(const SmallGraph& g) {
    return g.edge_count() == 0;
}

SmallGraph complete_graph(int n) {
    if (n < 0 || n > 64) throw error(errc::size_cap, "vertex count outside [0, 64]");
    SmallGraph g;
    g.n = n;
    g.adj.assign(n, 0);
    for (int v = 0; v < n; ++v) g.adj[v] = g.full_mask() & ~(1ull << v);
    return g;
}

SmallGraph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return graph_from_edges(n, e);
}

SmallGraph cycle_graph(int n) {
    if (n >= 0 && n < 3) throw error(errc::invalid_argument, "cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return graph_from_edges(n, e);
}

SmallGraph empty_graph(int n) {
    return graph_from_edges(n, {});
}

} // namespace turan
