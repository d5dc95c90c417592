#pragma once

// Shared helpers for the unit suites: seeded random graphs and a few named
// fixtures used across modules.

#include "turanlab/graph.hpp"

#include <random>
#include <vector>

inline turan::SmallGraph random_graph(int n, std::mt19937& rng, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return turan::graph_from_edges(n, edges);
}

inline turan::SmallGraph apply_permutation(const turan::SmallGraph& g,
                                           const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return turan::graph_from_edges(g.n, edges);
}

// Fixtures: vertex lists match the worked examples used throughout the
// suites.
inline turan::SmallGraph bowtie_graph() {
    return turan::graph_from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

inline turan::SmallGraph matching_graph(int pairs) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < pairs; ++i) edges.emplace_back(2 * i, 2 * i + 1);
    return turan::graph_from_edges(2 * pairs, edges);
}

inline turan::SmallGraph paw_graph() {
    return turan::graph_from_edges(4, {{0, 1}, {1, 3}, {3, 0}, {1, 2}});
}

inline turan::SmallGraph k2_k3_graph() {
    return turan::graph_from_edges(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}});
}
