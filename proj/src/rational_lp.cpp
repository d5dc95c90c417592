#include "turanlab/rational_lp.hpp"

#include "turanlab/error.hpp"

#include <algorithm>

namespace turan {

namespace {

// Dense tableau for the two-phase simplex.  Columns are structural
// variables, then one slack per <= row, then one artificial per row that
// lacks a usable slack.  Bland's rule (smallest eligible index) guarantees
// termination.
struct Tableau {
    int nstruct, nslack, nart = 0;
    std::vector<std::vector<Rat>> rows; // coefficient part, one per constraint
    std::vector<Rat> rhs;
    std::vector<int> basis;
    std::vector<int> sign;      // +-1 applied to each original row to get rhs >= 0
    std::vector<int> art_of;    // row -> artificial column, -1 if none
    std::vector<int> slack_of;  // row -> slack column, -1 for eq rows
    std::vector<Rat> red;       // reduced cost per column
    std::vector<bool> barred;   // columns excluded from entering

    int cols() const { return nstruct + nslack + nart; }

    explicit Tableau(const LpProblem& p) : nstruct(p.nvars), nslack(p.le_rows.size()) {
        int neq = static_cast<int>(p.eq_rows.size());
        int nrows = neq + nslack;
        rows.assign(nrows, {});
        rhs.resize(nrows);
        basis.assign(nrows, -1);
        sign.assign(nrows, 1);
        art_of.assign(nrows, -1);
        slack_of.assign(nrows, -1);
        for (int r = 0; r < nrows; ++r) {
            const auto& src = r < neq ? p.eq_rows[r] : p.le_rows[r - neq];
            const Rat& b = r < neq ? p.eq_rhs[r] : p.le_rhs[r - neq];
            if (static_cast<int>(src.size()) != nstruct)
                throw error(errc::invalid_argument, "LP row width mismatch");
            rows[r].assign(nstruct + nslack, 0);
            std::copy(src.begin(), src.end(), rows[r].begin());
            if (r >= neq) {
                slack_of[r] = nstruct + (r - neq);
                rows[r][slack_of[r]] = 1;
            }
            rhs[r] = b;
            if (rhs[r] < 0) {
                sign[r] = -1;
                for (Rat& v : rows[r]) v = -v;
                rhs[r] = -rhs[r];
            }
        }
        // Un-flipped <= rows start with their slack basic; everything else
        // needs an artificial.
        for (int r = 0; r < nrows; ++r) {
            if (slack_of[r] >= 0 && sign[r] == 1) {
                basis[r] = slack_of[r];
            } else {
                art_of[r] = nstruct + nslack + nart++;
            }
        }
        for (int r = 0; r < nrows; ++r) {
            rows[r].resize(cols(), 0);
            if (art_of[r] >= 0) {
                rows[r][art_of[r]] = 1;
                basis[r] = art_of[r];
            }
        }
        barred.assign(cols(), false);
    }

    void pivot(int r, int c) {
        Rat inv = 1 / rows[r][c];
        for (Rat& v : rows[r]) v *= inv;
        rhs[r] *= inv;
        for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
            if (static_cast<int>(r2) == r || rows[r2][c] == 0) continue;
            Rat f = rows[r2][c];
            for (int j = 0; j < cols(); ++j) rows[r2][j] -= f * rows[r][j];
            rhs[r2] -= f * rhs[r];
        }
        if (red[c] != 0) {
            Rat f = red[c];
            for (int j = 0; j < cols(); ++j) red[j] -= f * rows[r][j];
        }
        basis[r] = c;
    }

    void reset_reduced(const std::vector<Rat>& cost) {
        red = cost;
        red.resize(cols(), 0);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (cost.size() > static_cast<std::size_t>(basis[r]) && cost[basis[r]] != 0) {
                Rat f = cost[basis[r]];
                for (int j = 0; j < cols(); ++j) red[j] -= f * rows[r][j];
            }
        }
    }

    // Bland: entering column = smallest index with negative reduced cost;
    // leaving row = smallest basic index among the ratio-test minima.
    void optimize() {
        while (true) {
            int enter = -1;
            for (int c = 0; c < cols(); ++c)
                if (!barred[c] && red[c] < 0) {
                    enter = c;
                    break;
                }
            if (enter < 0) return;
            int leave = -1;
            Rat best;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (rows[r][enter] <= 0) continue;
                Rat ratio = rhs[r] / rows[r][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[r] < basis[leave])) {
                    leave = static_cast<int>(r);
                    best = ratio;
                }
            }
            if (leave < 0) throw error(errc::invalid_argument, "LP objective is unbounded");
            pivot(leave, enter);
        }
    }
};

} // namespace

LpResult lp_minimize(const LpProblem& problem, const std::vector<Rat>& objective) {
    if (static_cast<int>(objective.size()) != problem.nvars)
        throw error(errc::invalid_argument, "objective width mismatch");
    Tableau t(problem);

    // Phase 1: minimize the artificial sum.
    std::vector<Rat> phase1(t.cols(), 0);
    for (int c = t.nstruct + t.nslack; c < t.cols(); ++c) phase1[c] = 1;
    t.reset_reduced(phase1);
    t.optimize();
    Rat infeas = 0;
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        if (t.basis[r] >= t.nstruct + t.nslack) infeas += t.rhs[r];
    if (infeas > 0) {
        // Phase-1 duals y: for a row with artificial a, red[a] = 1 - y; for
        // a row whose slack stayed a unit column, red[slack] = -y.  Undo the
        // sign normalization, then flip to the documented orientation.
        int neq = static_cast<int>(problem.eq_rows.size());
        LpInfeasible w;
        w.eq_multipliers.resize(neq);
        w.le_multipliers.resize(problem.le_rows.size());
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            Rat y = t.art_of[r] >= 0 ? Rat(1 - t.red[t.art_of[r]]) : Rat(-t.red[t.slack_of[r]]);
            Rat orig = -(t.sign[r] * y);
            if (static_cast<int>(r) < neq)
                w.eq_multipliers[r] = orig;
            else
                w.le_multipliers[r - neq] = orig;
        }
        // The multipliers must prove infeasibility; fail loudly otherwise.
        Rat value = 0;
        for (int j = 0; j < problem.nvars; ++j) {
            Rat comb = 0;
            for (std::size_t r = 0; r < problem.eq_rows.size(); ++r)
                comb += w.eq_multipliers[r] * problem.eq_rows[r][j];
            for (std::size_t r = 0; r < problem.le_rows.size(); ++r)
                comb += w.le_multipliers[r] * problem.le_rows[r][j];
            if (comb < 0) throw error(errc::internal, "bad Farkas certificate (combined row)");
        }
        for (std::size_t r = 0; r < problem.le_rows.size(); ++r)
            if (w.le_multipliers[r] < 0)
                throw error(errc::internal, "bad Farkas certificate (slack sign)");
        for (std::size_t r = 0; r < problem.eq_rows.size(); ++r)
            value += w.eq_multipliers[r] * problem.eq_rhs[r];
        for (std::size_t r = 0; r < problem.le_rows.size(); ++r)
            value += w.le_multipliers[r] * problem.le_rhs[r];
        if (value >= 0) throw error(errc::internal, "bad Farkas certificate (rhs sign)");
        return w;
    }

    // Pivot leftover artificials out of the basis; an all-zero row is a
    // redundant constraint and is dropped.
    for (std::size_t r = 0; r < t.rows.size();) {
        if (t.basis[r] < t.nstruct + t.nslack) {
            ++r;
            continue;
        }
        int c = 0;
        while (c < t.nstruct + t.nslack && t.rows[r][c] == 0) ++c;
        if (c < t.nstruct + t.nslack) {
            t.red.assign(t.cols(), 0);
            t.pivot(static_cast<int>(r), c);
            ++r;
        } else {
            t.rows.erase(t.rows.begin() + r);
            t.rhs.erase(t.rhs.begin() + r);
            t.basis.erase(t.basis.begin() + r);
            t.sign.erase(t.sign.begin() + r);
            t.art_of.erase(t.art_of.begin() + r);
            t.slack_of.erase(t.slack_of.begin() + r);
        }
    }

    // Phase 2: artificials stay barred.
    for (int c = t.nstruct + t.nslack; c < t.cols(); ++c) t.barred[c] = true;
    std::vector<Rat> cost = objective;
    cost.resize(t.cols(), 0);
    t.reset_reduced(cost);
    t.optimize();

    LpSolution sol;
    sol.x.assign(problem.nvars, 0);
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        if (t.basis[r] < t.nstruct) sol.x[t.basis[r]] = t.rhs[r];
    sol.objective = 0;
    for (int j = 0; j < problem.nvars; ++j) sol.objective += objective[j] * sol.x[j];
    return sol;
}

LpResult lp_lexicographic(const LpProblem& problem,
                          const std::vector<std::vector<Rat>>& objectives) {
    if (objectives.empty()) throw error(errc::invalid_argument, "need at least one objective");
    LpProblem work = problem;
    LpSolution last;
    for (std::size_t i = 0; i < objectives.size(); ++i) {
        LpResult res = lp_minimize(work, objectives[i]);
        if (std::holds_alternative<LpInfeasible>(res)) {
            if (i > 0) throw error(errc::internal, "lexicographic stage lost feasibility");
            return res;
        }
        last = std::get<LpSolution>(res);
        work.eq_rows.push_back(objectives[i]);
        work.eq_rhs.push_back(last.objective);
    }
    Rat first = 0;
    for (int j = 0; j < problem.nvars; ++j) first += objectives[0][j] * last.x[j];
    last.objective = first;
    return last;
}

} // namespace turan
