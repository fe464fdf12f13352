#pragma once

#include "ortho/linalg.hpp"

#include <vector>

namespace ortho {

/// min c.x  subject to  A x = b, x >= 0, in exact rational arithmetic.
struct LpProblem {
    RatMatrix a;
    RatVector b;
    RatVector c;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
    LpStatus status = LpStatus::kInfeasible;
    RatVector x;        // primal optimum (kOptimal)
    Rat objective = 0;  // c.x at the optimum (kOptimal)
    // Farkas certificate (kInfeasible): y with y.A <= 0 componentwise and
    // y.b > 0, witnessing that no nonnegative x solves A x = b.
    RatVector farkas;
};

/// Two-phase dense tableau simplex with Bland's rule (always terminates).
LpSolution solve_lp(const LpProblem& lp);

}  // namespace ortho
