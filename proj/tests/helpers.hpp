#pragma once

// Shared test utilities: deterministic data generators and independent
// oracles (kept free of the implementation paths they check).

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "indexforge/dataset.hpp"
#include "indexforge/lp.hpp"
#include "indexforge/matrix.hpp"

namespace testutil {

class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

inline indexforge::Matrix random_matrix(TestRng& rng, std::size_t rows, std::size_t cols,
                                        double lo = 0.0, double hi = 1.0) {
  indexforge::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.uniform(lo, hi);
  return m;
}

inline indexforge::Matrix random_symmetric(TestRng& rng, std::size_t n, double scale = 1.0) {
  indexforge::Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = rng.uniform(-scale, scale);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

// SPD as A^T A + I.
inline indexforge::Matrix random_spd(TestRng& rng, std::size_t n) {
  const indexforge::Matrix a = random_matrix(rng, n, n, -1.0, 1.0);
  indexforge::Matrix m = multiply(indexforge::transpose(a), a);
  for (std::size_t i = 0; i < n; ++i) m(i, i) += 1.0;
  return m;
}

// Uniform raw data pushed through the real scaler, so tests see genuine
// scaled inputs (per-column min 0, max 1).
inline indexforge::IndicatorMatrix random_scaled(TestRng& rng, std::size_t systems,
                                                 std::size_t indicators) {
  std::vector<std::string> ids, names;
  for (std::size_t r = 0; r < systems; ++r) ids.push_back("s" + std::to_string(r + 1));
  for (std::size_t c = 0; c < indicators; ++c) names.push_back("X" + std::to_string(c + 1));
  auto raw = indexforge::make_indicator_matrix(
      ids, names, random_matrix(rng, systems, indicators, 0.0, 10.0), false);
  return indexforge::min_max_scale(raw);
}

// Gaussian elimination with partial pivoting; nullopt when singular.
inline std::optional<std::vector<double>> solve_linear(indexforge::Matrix a,
                                                       std::vector<double> b) {
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::fabs(a(r, col)) > std::fabs(a(pivot, col))) pivot = r;
    }
    if (std::fabs(a(pivot, col)) < 1e-11) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      std::swap(b[pivot], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
    x[i] = acc / a(i, i);
  }
  return x;
}

// Independent LP oracle: enumerate every basic point (each choice of n active
// constraints among {A rows, lower bounds}), keep the feasible ones, return
// the best objective. nullopt when no feasible vertex exists.
inline std::optional<double> best_vertex_objective(const indexforge::LpProblem& p,
                                                   double feas_tol = 1e-9) {
  const std::size_t n = p.objective.size();
  const std::size_t m = p.rhs.size();
  const std::size_t total = m + n;

  // rows of G w <= h: the m constraints then -w_i <= -lb_i
  auto g_row = [&](std::size_t r) {
    std::vector<double> row(n, 0.0);
    if (r < m) {
      for (std::size_t j = 0; j < n; ++j) row[j] = p.constraints(r, j);
    } else {
      row[r - m] = -1.0;
    }
    return row;
  };
  auto g_rhs = [&](std::size_t r) { return r < m ? p.rhs[r] : -p.lower_bounds[r - m]; };

  std::optional<double> best;
  std::vector<std::size_t> pick(n);
  auto consider = [&]() {
    indexforge::Matrix a(n, n);
    std::vector<double> b(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = g_row(pick[i]);
      for (std::size_t j = 0; j < n; ++j) a(i, j) = row[j];
      b[i] = g_rhs(pick[i]);
    }
    const auto w = solve_linear(a, b);
    if (!w) return;
    for (std::size_t r = 0; r < total; ++r) {
      const auto row = g_row(r);
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += row[j] * (*w)[j];
      if (acc > g_rhs(r) + feas_tol) return;
    }
    double obj = 0.0;
    for (std::size_t j = 0; j < n; ++j) obj += p.objective[j] * (*w)[j];
    if (!best || obj > *best) best = obj;
  };

  // iterate over all subsets of size n from [0, total)
  if (n > total) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  for (;;) {
    consider();
    std::size_t k = n;
    while (k > 0 && pick[k - 1] == total - n + (k - 1)) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

}  // namespace testutil
