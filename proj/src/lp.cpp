#include "indexforge/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "indexforge/errors.hpp"

namespace indexforge {

namespace {

constexpr double kOptimalityTol = 1e-9;
constexpr double kPivotTol = 1e-12;
constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

struct Tableau {
  std::size_t nstruct = 0;  // structural variables
  std::size_t ncols = 0;    // live columns: structural + slack (+ artificial)
  std::size_t first_artificial = kNoIndex;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  std::vector<std::size_t> basis;   // basis[i] = column basic in row i
  std::vector<double> reduced;      // reduced costs c_bar, maximization form
  double objval = 0.0;
  long pivots = 0;
  long pivot_limit = 0;

  enum class Outcome { Optimal, Unbounded };

  void pivot(std::size_t r, std::size_t s) {
    auto& prow = rows[r];
    const double inv = 1.0 / prow[s];
    for (double& v : prow) v *= inv;
    rhs[r] *= inv;
    prow[s] = 1.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const double f = rows[i][s];
      if (f == 0.0) continue;
      auto& row = rows[i];
      for (std::size_t j = 0; j < ncols; ++j) row[j] -= f * prow[j];
      row[s] = 0.0;
      rhs[i] -= f * rhs[r];
    }
    const double f = reduced[s];
    if (f != 0.0) {
      for (std::size_t j = 0; j < ncols; ++j) reduced[j] -= f * prow[j];
      reduced[s] = 0.0;
      objval += f * rhs[r];
    }
    basis[r] = s;
    ++pivots;
  }

  // Bland's rule: entering column = smallest index with positive reduced cost
  // (artificials may leave but never re-enter); leaving row = smallest ratio,
  // exact ties broken by smallest basic-variable index.
  Outcome run() {
    const std::size_t enter_limit = std::min(first_artificial, ncols);
    for (;;) {
      if (pivots > pivot_limit) {
        throw NumericError("simplex exceeded pivot limit of " + std::to_string(pivot_limit));
      }
      std::size_t enter = kNoIndex;
      for (std::size_t j = 0; j < enter_limit; ++j) {
        if (reduced[j] > kOptimalityTol) {
          enter = j;
          break;
        }
      }
      if (enter == kNoIndex) return Outcome::Optimal;

      std::size_t leave = kNoIndex;
      double best_ratio = 0.0;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const double a = rows[i][enter];
        if (a > kPivotTol) {
          const double ratio = rhs[i] / a;
          if (leave == kNoIndex || ratio < best_ratio ||
              (ratio == best_ratio && basis[i] < basis[leave])) {
            leave = i;
            best_ratio = ratio;
          }
        }
      }
      if (leave == kNoIndex) return Outcome::Unbounded;
      pivot(leave, enter);
    }
  }
};

void validate_problem(const LpProblem& p) {
  const std::size_t n = p.objective.size();
  const std::size_t m = p.rhs.size();
  if (n == 0) throw UsageError("lp: problem has no variables");
  if (p.constraints.cols() != n || p.lower_bounds.size() != n || p.constraints.rows() != m) {
    throw UsageError("lp: inconsistent problem dimensions");
  }
  auto finite = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
  };
  if (!finite(p.objective) || !finite(p.rhs) || !finite(p.lower_bounds) ||
      !p.constraints.all_finite()) {
    throw UsageError("lp: non-finite problem data");
  }
}

}  // namespace

LpSolution solve(const LpProblem& problem) {
  validate_problem(problem);
  const std::size_t n = problem.objective.size();
  const std::size_t m = problem.rhs.size();

  Tableau t;
  t.nstruct = n;
  t.ncols = n + m;
  t.pivot_limit = 10 * static_cast<long>(n + m) * static_cast<long>(n + m);
  t.rows.assign(m, std::vector<double>(t.ncols, 0.0));
  t.rhs.resize(m);
  t.basis.resize(m);

  // Shift lower bounds out: x = w - lb >= 0, rhs' = rhs - A.lb.
  for (std::size_t i = 0; i < m; ++i) {
    double shift = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      t.rows[i][j] = problem.constraints(i, j);
      shift += problem.constraints(i, j) * problem.lower_bounds[j];
    }
    t.rows[i][n + i] = 1.0;
    t.rhs[i] = problem.rhs[i] - shift;
    t.basis[i] = n + i;
  }

  bool need_phase1 = false;
  for (double b : t.rhs) {
    if (b < 0.0) need_phase1 = true;
  }

  if (need_phase1) {
    // Negate infeasible rows and give each an artificial basic variable, then
    // maximize minus the artificial sum.
    std::vector<std::size_t> art_rows;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.rhs[i] < 0.0) {
        for (double& v : t.rows[i]) v = -v;
        t.rhs[i] = -t.rhs[i];
        art_rows.push_back(i);
      }
    }
    t.first_artificial = t.ncols;
    t.ncols += art_rows.size();
    for (auto& row : t.rows) row.resize(t.ncols, 0.0);
    for (std::size_t k = 0; k < art_rows.size(); ++k) {
      const std::size_t i = art_rows[k];
      t.rows[i][t.first_artificial + k] = 1.0;
      t.basis[i] = t.first_artificial + k;
    }

    t.reduced.assign(t.ncols, 0.0);
    t.objval = 0.0;
    for (std::size_t i : art_rows) {
      for (std::size_t j = 0; j < t.first_artificial; ++j) t.reduced[j] += t.rows[i][j];
      t.objval -= t.rhs[i];
    }

    t.run();  // bounded below by construction, cannot be Unbounded
    if (t.objval < -kOptimalityTol) {
      return {LpStatus::Infeasible, {}, 0.0};
    }

    // Drive leftover artificials out of the basis; rows that cannot pivot are
    // redundant and get dropped.
    std::vector<std::size_t> drop;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.basis[i] < t.first_artificial) continue;
      std::size_t col = kNoIndex;
      for (std::size_t j = 0; j < t.first_artificial; ++j) {
        if (std::fabs(t.rows[i][j]) > kPivotTol) {
          col = j;
          break;
        }
      }
      if (col == kNoIndex) {
        drop.push_back(i);
      } else {
        t.pivot(i, col);
      }
    }
    for (auto it = drop.rbegin(); it != drop.rend(); ++it) {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(*it));
      t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(*it));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(*it));
    }
    t.ncols = n + m;
    t.first_artificial = kNoIndex;
    for (auto& row : t.rows) row.resize(t.ncols);
  }

  // Phase 2: price the real objective through the current basis.
  t.reduced.assign(t.ncols, 0.0);
  for (std::size_t j = 0; j < n; ++j) t.reduced[j] = problem.objective[j];
  t.objval = 0.0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double cb = t.basis[i] < n ? problem.objective[t.basis[i]] : 0.0;
    if (cb == 0.0) continue;
    for (std::size_t j = 0; j < t.ncols; ++j) t.reduced[j] -= cb * t.rows[i][j];
    t.objval += cb * t.rhs[i];
  }
  for (std::size_t i = 0; i < t.rows.size(); ++i) t.reduced[t.basis[i]] = 0.0;

  if (t.run() == Tableau::Outcome::Unbounded) {
    return {LpStatus::Unbounded, {}, 0.0};
  }

  LpSolution solution;
  solution.status = LpStatus::Optimal;
  solution.variables = problem.lower_bounds;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.basis[i] < n) solution.variables[t.basis[i]] += t.rhs[i];
  }
  double value = 0.0;
  for (std::size_t j = 0; j < n; ++j) value += problem.objective[j] * solution.variables[j];
  solution.objective_value = value;
  return solution;
}

}  // namespace indexforge
