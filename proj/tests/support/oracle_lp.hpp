#pragma once

#include <optional>

#include "mlds/lp.hpp"

namespace mlds::testing {

struct EnumerationResult {
    bool feasible = false;
    double best_value = 0.0;
};

/// Independent LP oracle: enumerates every choice of num_vars active
/// constraints (rows treated as equalities plus finite variable bounds),
/// solves the square system, keeps feasible vertices, and returns the best
/// objective. Only sensible for small instances; assumes a pointed feasible
/// region (every variable bounded on at least one side).
EnumerationResult enumerate_lp_optimum(const LpInstance& lp, double feas_tol = 1e-7);

}  // namespace mlds::testing
