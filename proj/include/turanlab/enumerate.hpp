#pragma once

#include "turanlab/canonical.hpp"
#include "turanlab/graph.hpp"

#include <optional>
#include <vector>

namespace turan {

// Isomorphism-free streams of canonical representatives, ordered by edge
// count and then canonical code.  Streams are cached per argument; capped at
// 10 vertices (intended workloads stop at 9).

// Every isomorphism class on m vertices.
const std::vector<SmallGraph>& enumerate_graphs(int m);

// Classes with no K_k subgraph; k >= 2.
const std::vector<SmallGraph>& enumerate_kfree(int m, int k);

// Classes containing at least one copy of h, restricted to K_k-free classes
// when k is given.  Requires |V(h)| <= m.
std::vector<SmallGraph> enumerate_types(int m, std::optional<int> k, const SmallGraph& h);

// K_k-free classes where every added edge completes a K_k.
std::vector<SmallGraph> enumerate_kfree_maximal(int m, int k);

} // namespace turan
