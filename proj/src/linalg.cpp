#include "indexforge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "indexforge/errors.hpp"

namespace indexforge {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kCholeskyPivotTol = 1e-12;
constexpr double kJacobiOffDiagTol = 1e-12;
constexpr int kJacobiMaxSweeps = 100;

void require_symmetric(const Matrix& m, const char* op) {
  if (m.rows() != m.cols() || !is_symmetric(m, kSymmetryTol)) {
    throw UsageError(std::string(op) + " requires a symmetric matrix (tolerance 1e-12)");
  }
}

double max_off_diagonal(const Matrix& a) {
  double worst = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = p + 1; q < a.cols(); ++q)
      worst = std::max(worst, std::fabs(a(p, q)));
  return worst;
}

}  // namespace

Matrix cholesky(const Matrix& m) {
  require_symmetric(m, "cholesky");
  const std::size_t n = m.rows();
  Matrix lower(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double pivot = m(j, j);
    for (std::size_t k = 0; k < j; ++k) pivot -= lower(j, k) * lower(j, k);
    if (pivot <= kCholeskyPivotTol) {
      throw NumericError("cholesky: matrix not positive definite (pivot " +
                         std::to_string(pivot) + " at column " + std::to_string(j) + ")");
    }
    lower(j, j) = std::sqrt(pivot);
    for (std::size_t i = j + 1; i < n; ++i) {
      double acc = m(i, j);
      for (std::size_t k = 0; k < j; ++k) acc -= lower(i, k) * lower(j, k);
      lower(i, j) = acc / lower(j, j);
    }
  }
  return lower;
}

EigenResult symmetric_eigendecomposition(const Matrix& m) {
  require_symmetric(m, "symmetric_eigendecomposition");
  const std::size_t n = m.rows();

  Matrix a = m;
  Matrix v = Matrix::identity(n);

  bool converged = (n < 2) || max_off_diagonal(a) < kJacobiOffDiagTol;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;

        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::fabs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);  // avoid overflow in theta^2
        } else {
          t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = arp - s * (arq + tau * arp);
          a(p, r) = a(r, p);
          a(r, q) = arq + s * (arp - tau * arq);
          a(q, r) = a(r, q);
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = vrp - s * (vrq + tau * vrp);
          v(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
    }
    converged = max_off_diagonal(a) < kJacobiOffDiagTol;
  }
  if (!converged) {
    throw NumericError("jacobi eigendecomposition did not converge in " +
                       std::to_string(kJacobiMaxSweeps) +
                       " sweeps (off-diagonal residual " +
                       std::to_string(max_off_diagonal(a)) + ")");
  }

  // Sort eigenpairs non-increasing; stable so equal eigenvalues keep their
  // a-diagonal order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

  EigenResult result;
  result.eigenvalues.resize(n);
  result.eigenvectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    result.eigenvalues[k] = a(src, src);

    // Sign convention: first entry of largest magnitude is non-negative.
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double mag = std::fabs(v(r, src));
      if (mag > best) {
        best = mag;
        arg = r;
      }
    }
    const double sign = v(arg, src) < 0.0 ? -1.0 : 1.0;
    for (std::size_t r = 0; r < n; ++r) result.eigenvectors(r, k) = sign * v(r, src);
  }
  return result;
}

}  // namespace indexforge
