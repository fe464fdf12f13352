#include "ortho/simplex.hpp"

#include <cassert>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace ortho {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau over columns [structural | artificial | rhs], row 0 holds the
// reduced costs and -objective in the rhs slot.
struct Tableau {
    RatMatrix t;              // (m+1) x (n_total+1)
    std::vector<std::size_t> basis;  // per constraint row, basic column
    std::size_t n_struct;
    std::size_t n_total;

    Rat& obj(std::size_t col) { return t[0][col]; }
    Rat& rhs(std::size_t row) { return t[row][n_total]; }

    void pivot(std::size_t row, std::size_t col) {
        const Rat p = t[row][col];
        for (auto& v : t[row]) v /= p;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i == row || t[i][col] == 0) continue;
            const Rat f = t[i][col];
            for (std::size_t j = 0; j <= n_total; ++j) t[i][j] -= f * t[row][j];
        }
        basis[row - 1] = col;
    }

    // Bland: entering = lowest-index column with negative reduced cost;
    // leaving = min ratio, ties broken by lowest basic column index.
    // `allowed(col)` gates which columns may enter.
    template <typename Allowed>
    LpStatus iterate(const Allowed& allowed) {
        for (;;) {
            std::size_t enter = kNone;
            for (std::size_t j = 0; j < n_total; ++j) {
                if (allowed(j) && obj(j) < 0) { enter = j; break; }
            }
            if (enter == kNone) return LpStatus::kOptimal;

            std::size_t leave = kNone;
            Rat best_ratio = 0;
            for (std::size_t i = 1; i < t.size(); ++i) {
                if (t[i][enter] <= 0) continue;
                const Rat ratio = rhs(i) / t[i][enter];
                if (leave == kNone || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i - 1] < basis[leave - 1])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == kNone) return LpStatus::kUnbounded;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpSolution solve_lp(const LpProblem& lp) {
    const std::size_t m = lp.a.size();
    const std::size_t n = lp.c.size();
    for (const auto& row : lp.a) {
        if (row.size() != n) throw std::invalid_argument("lp: ragged constraint matrix");
    }
    if (lp.b.size() != m) throw std::invalid_argument("lp: rhs size mismatch");

    Tableau tb;
    tb.n_struct = n;
    tb.n_total = n + m;
    tb.t.assign(m + 1, RatVector(tb.n_total + 1, 0));
    tb.basis.assign(m, 0);

    // Rows are sign-flipped as needed so every artificial starts feasible.
    std::vector<int> row_sign(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        row_sign[i] = lp.b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) tb.t[i + 1][j] = row_sign[i] * lp.a[i][j];
        tb.t[i + 1][n + i] = 1;
        tb.t[i + 1][tb.n_total] = row_sign[i] * lp.b[i];
        tb.basis[i] = n + i;
    }

    // Phase 1: minimize the artificial sum. Reduced costs of the initial
    // all-artificial basis are the negated column sums.
    for (std::size_t j = 0; j <= tb.n_total; ++j) {
        Rat s = 0;
        for (std::size_t i = 1; i <= m; ++i) s += tb.t[i][j];
        tb.t[0][j] = (j >= n && j < tb.n_total) ? Rat(1) - s : -s;
    }

    const LpStatus phase1 = tb.iterate([](std::size_t) { return true; });
    assert(phase1 == LpStatus::kOptimal);  // phase-1 objective is bounded below by 0
    (void)phase1;

    const Rat infeasibility = -tb.t[0][tb.n_total];
    if (infeasibility > 0) {
        // y_i = 1 - reduced cost of artificial i, undoing the row flip.
        LpSolution sol;
        sol.status = LpStatus::kInfeasible;
        sol.farkas.assign(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            sol.farkas[i] = row_sign[i] * (Rat(1) - tb.t[0][n + i]);
        }
        return sol;
    }

    // Drive leftover artificials out of the basis; an all-zero structural row
    // is a redundant constraint and its artificial stays parked at zero.
    std::vector<bool> dead_row(m + 1, false);
    for (std::size_t i = 1; i <= m; ++i) {
        if (tb.basis[i - 1] < n) continue;
        std::size_t col = kNone;
        for (std::size_t j = 0; j < n; ++j) {
            if (tb.t[i][j] != 0) { col = j; break; }
        }
        if (col == kNone) {
            dead_row[i] = true;
        } else {
            tb.pivot(i, col);
        }
    }

    // Phase 2 objective row rebuilt against the current basis.
    for (std::size_t j = 0; j <= tb.n_total; ++j) {
        Rat z = 0;
        for (std::size_t i = 1; i <= m; ++i) {
            const std::size_t bi = tb.basis[i - 1];
            if (bi < n && lp.c[bi] != 0) z += lp.c[bi] * tb.t[i][j];
        }
        tb.t[0][j] = (j < n ? lp.c[j] : Rat(0)) - z;
    }

    const LpStatus phase2 = tb.iterate([&](std::size_t j) { return j < n; });
    if (phase2 == LpStatus::kUnbounded) {
        LpSolution sol;
        sol.status = LpStatus::kUnbounded;
        return sol;
    }
    (void)dead_row;

    LpSolution sol;
    sol.status = LpStatus::kOptimal;
    sol.x.assign(n, 0);
    for (std::size_t i = 1; i <= m; ++i) {
        if (tb.basis[i - 1] < n) sol.x[tb.basis[i - 1]] = tb.rhs(i);
    }
    sol.objective = -tb.t[0][tb.n_total];
    return sol;
}

}  // namespace ortho
