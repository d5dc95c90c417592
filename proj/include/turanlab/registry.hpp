#pragma once

#include "turanlab/canonical.hpp"
#include "turanlab/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace turan {

// Why a pattern is accepted as k-good.  Structural tags come from the
// recognizers below; builtin covers the fixed seed list, extension covers
// clique-attachment constructions, axiom covers user-supplied entries.
enum class Provenance {
    Clique,          // h = K_r, r <= k-1
    Matching,        // h is a perfect matching (disjoint edges, no isolated vertex)
    CliqueUnion,     // h is a disjoint union of cliques, each smaller than K_k
    CliquePlusVertex,// h minus one vertex is complete, k >= |V(h)|
    CliquePlusPair,  // h minus one edge's endpoints is complete, |V(h)| = k
    TuranGraph,      // h is the Turán graph T_{k-1}(|V(h)|)
    TriangleClassic, // k = 3: paths, even cycles, K_{2,3}
    Builtin,         // fixed seed entries
    Extension,       // produced by extend_by_attachment
    Axiom,           // registered by the caller
};

std::string provenance_tag(Provenance p);
Provenance provenance_from_tag(const std::string& tag);

// Either "k >= lo" (hi unset) or "lo <= k <= hi"; "k = n" is the one-point
// range.
struct KCondition {
    int lo = 3;
    int hi = 0; // 0 marks no upper bound

    bool contains(int k) const { return k >= lo && (hi == 0 || k <= hi); }
    std::string str() const;
    static KCondition at_least(int lo) { return {lo, 0}; }
    static KCondition exactly(int k) { return {k, k}; }
    bool operator==(const KCondition&) const = default;
};

KCondition parse_k_condition(const std::string& s);

struct GoodnessEntry {
    SmallGraph rep; // canonical representative
    CanonicalCode code;
    KCondition condition;
    Provenance provenance = Provenance::Axiom;
    std::string note;
};

// Decides whether a pattern is known to be k-good: maximizing its subgraph
// count over n-vertex K_k-free graphs is achieved by the Turán graph
// T_{k-1}(n) for all large n.  Structural recognizers run first, then stored
// entries (seeds, extensions, axioms) in insertion order.  Patterns
// containing a K_k are never good and always answer "unknown".
class GoodnessRegistry {
public:
    GoodnessRegistry();

    // k >= 3.  nullopt means "no justification known", not "bad".
    std::optional<GoodnessEntry> is_known_good(const SmallGraph& h, int k) const;

    // Attach a fresh K_{k-1} to a clique of h (given as a vertex mask) with
    // an arbitrary bipartite join between them: join pairs are (vertex of h
    // inside the clique mask, index 0..k-2 into the new clique).  Requires h
    // known k-good; rejects results containing a K_k.  The result is k-good
    // and gets stored with chained provenance.
    std::pair<SmallGraph, GoodnessEntry>
    extend_by_attachment(const SmallGraph& h, std::uint64_t clique_mask,
                         const std::vector<std::pair<int, int>>& joins, int k);

    // Caller-asserted goodness.  Rejects patterns containing a K_{lo}.
    // Registering an identical entry again returns the stored one.
    GoodnessEntry register_axiom(const SmallGraph& h, KCondition condition,
                                 const std::string& note);

    // One JSON object per line; load appends and skips exact duplicates,
    // returning the number of new entries.
    void dump(std::ostream& out) const;
    int load(std::istream& in);

    const std::vector<GoodnessEntry>& stored() const { return entries_; }

private:
    GoodnessEntry put(GoodnessEntry e);
    std::vector<GoodnessEntry> entries_;
};

} // namespace turan
