#pragma once

#include "turanlab/graph.hpp"
#include "turanlab/registry.hpp"
#include "turanlab/types.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace turan {

// A claimed linear bound N(h, G) <= sum_j c_j N(B_j, G) over K_k-free hosts
// G, with equality on complete multipartite hosts.  Gadgets B_j are stored
// padded to the common type size; coefficients are nonnegative rationals.
struct Certificate {
    SmallGraph h;
    int k = 0;
    std::vector<SmallGraph> gadgets;
    std::vector<Rat> coefficients;
    std::vector<std::string> provenance; // registry tag per gadget, filled on verify
};

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

struct ColumnCheck {
    SmallGraph type;
    Count pattern_count;
    Rat combination; // sum_j c_j N(B_j, type)
};

// verified means: every gadget is registry-good at k, the inequality holds
// on every K_k-free type containing h, and equality holds on every complete
// multipartite type with at most k-1 parts (h-free ones included, where both
// sides must vanish).  Gadgets without a registry justification throw a
// provenance error instead of returning a report.
struct VerificationReport {
    bool verified = false;
    Certificate certificate; // provenance filled in
    int m = 0;
    std::vector<ColumnCheck> equality_columns;
    std::vector<ColumnCheck> inequality_columns;
    std::optional<SmallGraph> failing_column;
    std::string failure;
};

VerificationReport verify_certificate(const Certificate& cert, const GoodnessRegistry& registry);
std::string verification_report_to_json(const VerificationReport& report);

// Nonnegative column multipliers (free on equality columns) proving that no
// nonnegative coefficient vector can satisfy the column constraints: the
// combined gadget rows are <= 0 while the combined pattern row is positive.
struct InfeasibilityWitness {
    SmallGraph h;
    int k = 0;
    std::vector<SmallGraph> pool;
    std::vector<std::pair<SmallGraph, Rat>> combination; // nonzero multipliers only
};

std::string witness_to_json(const InfeasibilityWitness& witness);

using FindResult = std::variant<Certificate, InfeasibilityWitness>;

// Exact LP over the type columns: equality on complete multipartite columns,
// inequality elsewhere, minimizing the coefficient sum and then each
// coefficient in turn, so the result is deterministic.  Pool gadgets must be
// registry-good at k.
FindResult find_certificate(const SmallGraph& h, int k, const std::vector<SmallGraph>& pool,
                            const GoodnessRegistry& registry);

// Both sides of the certificate identity on the Turán graph T_{k-1}(n),
// computed independently by the multipartite closed form.  They agree for a
// verified certificate; disagreement is reported as an internal error.
struct BoundReport {
    int n = 0;
    Count pattern_count;
    Count bound;
};

BoundReport certificate_bound_at(const Certificate& cert, const GoodnessRegistry& registry,
                                 int n);

} // namespace turan
