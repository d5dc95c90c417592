#pragma once

#include "turanlab/graph.hpp"
#include "turanlab/types.hpp"

#include <string>
#include <vector>

namespace turan {

// Part sizes of a complete multipartite graph, non-increasing, every entry
// positive.  Part sizes may run into the thousands; only realize() needs the
// total to fit in 64 vertices.
struct PartVector {
    std::vector<int> sizes;

    int total() const;
    int part_count() const { return static_cast<int>(sizes.size()); }
    bool operator==(const PartVector&) const = default;
};

// Sorts descending and drops zeros; rejects negative entries.
PartVector part_vector(std::vector<int> sizes);

// Comma-separated literal, e.g. "3,2,2".
PartVector parse_part_vector(const std::string& s);
std::string format_part_vector(const PartVector& p);

// Part sizes of the Turán graph T_r(n): r parts as equal as possible.  Parts
// of size zero are dropped when n < r.
PartVector turan_parts(int r, int n);

// The concrete complete multipartite graph; total size capped at 64.
SmallGraph realize_multipartite(const PartVector& p);

// Part profile of a complete multipartite graph, or empty if g is not
// complete multipartite (equivalently: its complement has a non-clique
// component).
std::vector<int> multipartite_profile(const SmallGraph& g);

// Subgraph copies of h in the complete multipartite graph with parts p,
// computed by the closed form: sum over proper part-assignments of h's
// vertices of products of falling factorials, divided by |Aut(h)|.  Never
// materializes the host, so parts may be large.
Count count_copies_in_multipartite(const SmallGraph& h, const PartVector& p);

// Vertex subsets of K(p) inducing the complete multipartite graph with
// profile t (t as produced by multipartite_profile).
Count induced_type_count(const std::vector<int>& t, const PartVector& p);

// All complete multipartite graphs on m vertices with at most rmax parts, as
// concrete graphs in stream order (edge count, then canonical code).
std::vector<SmallGraph> multipartite_types(int m, int rmax);

// binom(k-1, r) * ceil(n / (k-1))^r; requires 1 <= r <= k-1.
Count zykov_bound(int n, int r, int k);

// Effect on N(h, .) of moving one vertex from part j to part i, where
// sizes[j] >= sizes[i] + 2.  Returns the counts before and after.
struct BalancingStep {
    Count before;
    Count after;
};
BalancingStep balancing_compare(const SmallGraph& h, const std::vector<int>& sizes, int i, int j);

} // namespace turan
