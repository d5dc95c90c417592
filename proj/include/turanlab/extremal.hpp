#pragma once

#include "turanlab/graph.hpp"
#include "turanlab/types.hpp"

#include <string>
#include <vector>

namespace turan {

// Exhaustive maximum of N(h, .) over K_k-free hosts on n vertices.  With
// maximal_only the sweep is restricted to edge-maximal K_k-free classes,
// which is safe: adding edges never loses copies of h.
struct ExtremalReport {
    SmallGraph h;
    int n = 0;
    int k = 0;
    bool maximal_only = true;
    Count maximum;
    Count turan_count; // N(h, T_{k-1}(n))
    bool turan_is_max = false;
    bool turan_unique = false; // exactly one maximizer, and it is T_{k-1}(n)
    std::vector<SmallGraph> extremal_graphs; // stream order
    std::string note;
};

// n capped at 9 (full sweeps get slow beyond 8).  Worker count comes from
// TURANLAB_THREADS, defaulting to the hardware count; results do not depend
// on it.
ExtremalReport brute_force_ex(const SmallGraph& h, int n, int k, bool maximal_only);

// Single-size check: does the Turán graph attain the maximum at this n?
// Evidence at one size only, not the asymptotic statement.
ExtremalReport check_turan_good_at(const SmallGraph& h, int n, int k);

std::string extremal_report_to_json(const ExtremalReport& report);

} // namespace turan
