#include "turanlab/enumerate.hpp"

#include "turanlab/counting.hpp"
#include "turanlab/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

namespace turan {

namespace {

constexpr int kMaxEnumVertices = 10;

void sort_stream(std::vector<SmallGraph>& graphs) {
    std::sort(graphs.begin(), graphs.end(), [](const SmallGraph& a, const SmallGraph& b) {
        if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
        return canonical_form(a) < canonical_form(b);
    });
}

// One vertex-augmentation level.  Every class on i+1 vertices contains a
// vertex whose removal lands in the previous level, so trying all 2^i
// attachment masks on every representative reaches every class.  With
// clique_bound k, a child stays K_k-free iff the attachment mask carries no
// K_{k-1}; K_k-freeness is hereditary, so pruned levels stay complete.
std::vector<SmallGraph> extend_level(const std::vector<SmallGraph>& prev, int clique_bound) {
    std::unordered_set<CanonicalCode> seen;
    std::vector<SmallGraph> out;
    for (const SmallGraph& parent : prev) {
        for (std::uint64_t mask = 0; mask < (1ull << parent.n); ++mask) {
            if (clique_bound &&
                std::popcount(mask) >= clique_bound - 1 &&
                contains_clique(induced_subgraph(parent, mask), clique_bound - 1))
                continue;
            SmallGraph child = add_vertex(parent, mask);
            if (seen.insert(canonical_form(child)).second)
                out.push_back(canonical_relabel(child));
        }
    }
    sort_stream(out);
    return out;
}

std::vector<SmallGraph> build_stream(int m, int clique_bound) {
    std::vector<SmallGraph> level{empty_graph(1)};
    for (int i = 1; i < m; ++i) level = extend_level(level, clique_bound);
    return level;
}

std::mutex cache_mutex;

} // namespace

const std::vector<SmallGraph>& enumerate_graphs(int m) {
    if (m < 1 || m > kMaxEnumVertices)
        throw error(errc::size_cap, "enumeration capped at vertex counts in [1, 10]");
    std::lock_guard<std::mutex> lock(cache_mutex);
    static std::map<int, std::vector<SmallGraph>> cache;
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, build_stream(m, 0)).first;
    return it->second;
}

const std::vector<SmallGraph>& enumerate_kfree(int m, int k) {
    if (m < 1 || m > kMaxEnumVertices)
        throw error(errc::size_cap, "enumeration capped at vertex counts in [1, 10]");
    if (k < 2) throw error(errc::invalid_argument, "clique bound needs k >= 2");
    std::lock_guard<std::mutex> lock(cache_mutex);
    static std::map<std::pair<int, int>, std::vector<SmallGraph>> cache;
    auto key = std::make_pair(m, k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_stream(m, k)).first;
    return it->second;
}

std::vector<SmallGraph> enumerate_types(int m, std::optional<int> k, const SmallGraph& h) {
    if (h.n > m)
        throw error(errc::invalid_argument, "pattern has more vertices than the type size");
    const std::vector<SmallGraph>& classes = k ? enumerate_kfree(m, *k) : enumerate_graphs(m);
    std::vector<SmallGraph> out;
    for (const SmallGraph& t : classes)
        if (count_copies(h, t) > 0) out.push_back(t);
    return out;
}

std::vector<SmallGraph> enumerate_kfree_maximal(int m, int k) {
    std::vector<SmallGraph> out;
    for (const SmallGraph& g : enumerate_kfree(m, k)) {
        bool maximal = true;
        for (int u = 0; u < m && maximal; ++u)
            for (int v = u + 1; v < m; ++v) {
                if (g.has_edge(u, v)) continue;
                // Adding uv completes a K_k iff u and v share a K_{k-2}.
                if (!contains_clique(induced_subgraph(g, g.adj[u] & g.adj[v]), k - 2)) {
                    maximal = false;
                    break;
                }
            }
        if (maximal) out.push_back(g);
    }
    return out;
}

} // namespace turan
