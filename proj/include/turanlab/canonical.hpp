#pragma once

#include "turanlab/graph.hpp"

#include <string>

namespace turan {

// Byte string: [n][upper-triangle adjacency bits of the minimal labeling,
// column-major, packed MSB-first].  Equal codes iff isomorphic.  Compares and
// hashes as an ordinary string; the byte comparison order is the tie-break
// order used throughout enumeration streams.
using CanonicalCode = std::string;

// Exact branch-and-bound over labelings, pruning on bit-string prefixes.
// Capped at 10 vertices.
CanonicalCode canonical_form(const SmallGraph& g);

// The relabeled graph whose adjacency bit-string equals the canonical code.
SmallGraph canonical_relabel(const SmallGraph& g);

// Capped at 10 vertices on either side.
bool is_isomorphic(const SmallGraph& a, const SmallGraph& b);

// |Aut(g)| by backtracking.  Capped at 10 vertices (2^10 fits easily; the cap
// keeps runtimes predictable).
long long automorphism_count(const SmallGraph& g);

} // namespace turan
