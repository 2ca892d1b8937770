#pragma once

#include <vector>

#include "indexforge/matrix.hpp"

namespace indexforge {

enum class LpStatus { Optimal, Infeasible, Unbounded };

// maximize objective . w  subject to  constraints . w <= rhs,  w >= lower_bounds
struct LpProblem {
  std::vector<double> objective;
  Matrix constraints;
  std::vector<double> rhs;
  std::vector<double> lower_bounds;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> variables;  // populated only when Optimal
  double objective_value = 0.0;   // meaningful only when Optimal
};

// Dense two-phase simplex with Bland's smallest-index pivot rule, so the
// returned vertex is a deterministic function of the input. Lower bounds are
// shifted out (w = lb + x, x >= 0) rather than added as constraint rows.
// Tolerances: pivot threshold 1e-12, feasibility/optimality 1e-9. Throws
// NumericError past 10*(vars+constraints)^2 pivots.
LpSolution solve(const LpProblem& problem);

}  // namespace indexforge
