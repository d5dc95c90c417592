#pragma once

#include "turanlab/graph.hpp"
#include "turanlab/types.hpp"

#include <cstdint>

namespace turan {

// Injective maps V(h) -> V(g) sending edges to edges.
Count count_injective_homs(const SmallGraph& h, const SmallGraph& g);

// Subgraph copies: distinct subgraphs of g isomorphic to h, i.e. injective
// homs divided by |Aut(h)|.  Isolated vertices of h count as free vertex
// choices.
Count count_copies(const SmallGraph& h, const SmallGraph& g);

// Vertex subsets of g inducing a graph isomorphic to h.
Count count_induced_copies(const SmallGraph& h, const SmallGraph& g);

// Ordered pairs (H1, H2) of vertex-disjoint subgraph copies, H1 of g1 and H2
// of g2, inside g.
Count count_disjoint_pairs(const SmallGraph& g1, const SmallGraph& g2, const SmallGraph& g);

// A host graph together with a 2-coloring of its vertices into a left clique
// of size l and a right clique of size m.  Build via split_pattern, which
// validates both sides.
struct SplitPattern {
    SmallGraph host;
    std::uint64_t left = 0;
    std::uint64_t right = 0;

    int left_size() const { return std::popcount(left); }
    int right_size() const { return std::popcount(right); }
};

// right = complement of left; both sides must induce cliques and be nonempty.
SplitPattern split_pattern(const SmallGraph& host, std::uint64_t left);

// Copies of split.host inside g[s1 | s2] admitting an isomorphism that maps
// the left side onto s1 and the right side onto s2.  s1 and s2 must be
// disjoint cliques of g of the matching sizes.
Count count_split_copies(const SplitPattern& split, std::uint64_t s1, std::uint64_t s2,
                         const SmallGraph& g);

// Sum of count_split_copies over all ordered disjoint (K_l, K_m) pairs of the
// host itself.  Always a positive integer: the host's own split contributes.
Count split_multiplicity(const SplitPattern& split);

} // namespace turan
