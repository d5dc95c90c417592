#pragma once

#include "turanlab/types.hpp"

#include <variant>
#include <vector>

namespace turan {

// Linear program over exact rationals:
//   minimize   c . x
//   subject to eq_rows . x  = eq_rhs
//              le_rows . x <= le_rhs
//              x >= 0
struct LpProblem {
    int nvars = 0;
    std::vector<std::vector<Rat>> eq_rows;
    std::vector<Rat> eq_rhs;
    std::vector<std::vector<Rat>> le_rows;
    std::vector<Rat> le_rhs;
};

struct LpSolution {
    std::vector<Rat> x;
    Rat objective;
};

// Farkas certificate of infeasibility: eq_multipliers free, le_multipliers
// >= 0, the combined row sum_i y_i * row_i is componentwise >= 0 while
// sum_i y_i * rhs_i < 0.  No x >= 0 can satisfy such a system.
struct LpInfeasible {
    std::vector<Rat> eq_multipliers;
    std::vector<Rat> le_multipliers;
};

using LpResult = std::variant<LpSolution, LpInfeasible>;

// Two-phase simplex with Bland's rule; exact, always terminates.  Throws on
// an unbounded objective.
LpResult lp_minimize(const LpProblem& problem, const std::vector<Rat>& objective);

// Minimizes objectives[0], then objectives[1] subject to the first staying
// at its optimum, and so on.  The returned solution is optimal for the whole
// chain.
LpResult lp_lexicographic(const LpProblem& problem,
                          const std::vector<std::vector<Rat>>& objectives);

} // namespace turan
