#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "helpers.hpp"
#include "indexforge/errors.hpp"
#include "indexforge/linalg.hpp"
#include "indexforge/matrix.hpp"
#include "indexforge/stats.hpp"

using namespace indexforge;
using testutil::TestRng;

namespace {

Matrix column_matrix(const std::vector<std::vector<double>>& cols) {
  Matrix m(cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < cols[c].size(); ++r) m(r, c) = cols[c][r];
  return m;
}

}  // namespace

TEST_CASE("column_stats on hand-checked columns") {
  const Matrix m = column_matrix({{1, 1, 1}, {1, 2, 3}});

  const ColumnStats constant = column_stats(m, 0);
  CHECK(constant.mean == doctest::Approx(1.0));
  CHECK(constant.variance == doctest::Approx(0.0));

  const ColumnStats linear = column_stats(m, 1);
  CHECK(linear.mean == doctest::Approx(2.0));
  CHECK(linear.variance == doctest::Approx(1.0));
  CHECK(linear.stddev == doctest::Approx(1.0));

  // two-point column: variance with denominator 1
  const Matrix two = column_matrix({{0, 2}});
  const ColumnStats s = column_stats(two, 0);
  CHECK(s.mean == doctest::Approx(1.0));
  CHECK(s.variance == doctest::Approx(2.0));

  // single row falls back to variance 0
  const Matrix one(1, 1, {5.0});
  CHECK(column_stats(one, 0).variance == 0.0);

  CHECK_THROWS_AS(column_stats(m, 2), UsageError);
}

TEST_CASE("pearson correlation on hand-checked pairs") {
  SUBCASE("identical non-constant columns") {
    const Matrix m = column_matrix({{1, 2, 3}, {1, 2, 3}});
    const Matrix r = pearson_correlation_matrix(m);
    CHECK(r(0, 1) == doctest::Approx(1.0));
    CHECK(r(0, 0) == 1.0);
  }
  SUBCASE("perfect anti-correlation") {
    const Matrix m = column_matrix({{0, 1}, {1, 0}});
    CHECK(pearson_correlation_matrix(m)(0, 1) == doctest::Approx(-1.0));
  }
  SUBCASE("zero covariance") {
    const Matrix m = column_matrix({{1, 2, 3}, {1, 0, 1}});
    CHECK(pearson_correlation_matrix(m)(0, 1) == doctest::Approx(0.0));
  }
  SUBCASE("zero-variance column gets r = 0 everywhere, diagonal included") {
    const Matrix m = column_matrix({{2, 2, 2}, {1, 2, 3}});
    std::vector<std::string> warnings;
    const Matrix r = pearson_correlation_matrix(m, &warnings);
    CHECK(r(0, 0) == 0.0);
    CHECK(r(0, 1) == 0.0);
    CHECK(r(1, 1) == 1.0);
    CHECK(warnings.size() == 1);
  }
  SUBCASE("fewer than two rows is a usage error") {
    CHECK_THROWS_AS(pearson_correlation_matrix(Matrix(1, 2, {1.0, 2.0})), UsageError);
  }
}

TEST_CASE("correlation matrix is exactly symmetric with unit diagonal") {
  TestRng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix m = testutil::random_matrix(rng, 3 + trial % 10, 2 + trial % 5);
    const Matrix r = pearson_correlation_matrix(m);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      CHECK(r(i, i) == 1.0);
      for (std::size_t j = 0; j < r.cols(); ++j) {
        CHECK(r(i, j) == r(j, i));  // bit-exact, computed once per pair
        CHECK(r(i, j) >= -1.0);
        CHECK(r(i, j) <= 1.0);
      }
    }
  }
}

TEST_CASE("cholesky hand cases") {
  CHECK(max_abs_diff(cholesky(Matrix::identity(3)), Matrix::identity(3)) == 0.0);

  const Matrix m(2, 2, {4, 2, 2, 3});
  const Matrix l = cholesky(m);
  CHECK(l(0, 0) == doctest::Approx(2.0));
  CHECK(l(0, 1) == 0.0);
  CHECK(l(1, 0) == doctest::Approx(1.0));
  CHECK(l(1, 1) == doctest::Approx(std::sqrt(2.0)));

  const Matrix corr(2, 2, {1.0, 0.99, 0.99, 1.0});
  const Matrix lc = cholesky(corr);
  CHECK(lc(0, 0) == doctest::Approx(1.0));
  CHECK(lc(1, 0) == doctest::Approx(0.99));
  CHECK(lc(1, 1) == doctest::Approx(std::sqrt(1.0 - 0.99 * 0.99)));

  CHECK_THROWS_AS(cholesky(Matrix(2, 2, {1, 2, 2, 1})), NumericError);   // indefinite
  CHECK_THROWS_AS(cholesky(Matrix(2, 2, {1, 0, 0.5, 1})), UsageError);   // asymmetric
}

TEST_CASE("cholesky round-trip on random SPD matrices") {
  TestRng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix m = testutil::random_spd(rng, 1 + trial % 10);
    const Matrix l = cholesky(m);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = i + 1; j < m.cols(); ++j) CHECK(l(i, j) == 0.0);
    CHECK(max_abs_diff(multiply(l, transpose(l)), m) < 1e-9);
  }
}

TEST_CASE("eigendecomposition hand cases") {
  SUBCASE("diagonal") {
    const EigenResult e = symmetric_eigendecomposition(Matrix(2, 2, {3, 0, 0, 1}));
    CHECK(e.eigenvalues[0] == doctest::Approx(3.0));
    CHECK(e.eigenvalues[1] == doctest::Approx(1.0));
    CHECK(e.eigenvectors(0, 0) == doctest::Approx(1.0));
    CHECK(e.eigenvectors(1, 1) == doctest::Approx(1.0));
  }
  SUBCASE("[[2,1],[1,2]] -> (3,1) with (1,1)/sqrt2 and (1,-1)/sqrt2") {
    const EigenResult e = symmetric_eigendecomposition(Matrix(2, 2, {2, 1, 1, 2}));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(e.eigenvalues[0] == doctest::Approx(3.0));
    CHECK(e.eigenvalues[1] == doctest::Approx(1.0));
    CHECK(e.eigenvectors(0, 0) == doctest::Approx(inv_sqrt2));
    CHECK(e.eigenvectors(1, 0) == doctest::Approx(inv_sqrt2));
    CHECK(e.eigenvectors(0, 1) == doctest::Approx(inv_sqrt2));
    CHECK(e.eigenvectors(1, 1) == doctest::Approx(-inv_sqrt2));
  }
  SUBCASE("rank-1 matrix: trace and determinant pin (2, 0)") {
    const EigenResult e = symmetric_eigendecomposition(Matrix(2, 2, {1, 1, 1, 1}));
    CHECK(e.eigenvalues[0] == doctest::Approx(2.0));
    CHECK(e.eigenvalues[1] == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("eigendecomposition properties on random symmetric matrices") {
  TestRng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const Matrix m = testutil::random_symmetric(rng, n);
    const EigenResult e = symmetric_eigendecomposition(m);

    for (std::size_t k = 0; k + 1 < n; ++k) CHECK(e.eigenvalues[k] >= e.eigenvalues[k + 1]);

    double trace = 0.0, sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      trace += m(i, i);
      sum += e.eigenvalues[i];
    }
    CHECK(sum == doctest::Approx(trace).epsilon(1e-9));

    // unit norm, orthogonality, sign convention, residual
    Matrix recon(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      double norm = 0.0;
      for (std::size_t r = 0; r < n; ++r) norm += e.eigenvectors(r, k) * e.eigenvectors(r, k);
      CHECK(std::fabs(std::sqrt(norm) - 1.0) < 1e-9);

      for (std::size_t l = k + 1; l < n; ++l) {
        double dot = 0.0;
        for (std::size_t r = 0; r < n; ++r) dot += e.eigenvectors(r, k) * e.eigenvectors(r, l);
        CHECK(std::fabs(dot) < 1e-9);
      }

      double best = -1.0;
      double at_best = 0.0;
      for (std::size_t r = 0; r < n; ++r) {
        if (std::fabs(e.eigenvectors(r, k)) > best) {
          best = std::fabs(e.eigenvectors(r, k));
          at_best = e.eigenvectors(r, k);
        }
      }
      CHECK(at_best >= 0.0);

      // residual of m v = lambda v
      for (std::size_t r = 0; r < n; ++r) {
        double mv = 0.0;
        for (std::size_t c = 0; c < n; ++c) mv += m(r, c) * e.eigenvectors(c, k);
        CHECK(std::fabs(mv - e.eigenvalues[k] * e.eigenvectors(r, k)) < 1e-8);
      }
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          recon(r, c) += e.eigenvalues[k] * e.eigenvectors(r, k) * e.eigenvectors(c, k);
    }
    CHECK(max_abs_diff(recon, m) < 1e-8);

    if (n <= 4) {
      // determinant via eigenvalue product, checked against cofactor expansion
      double det_eig = 1.0;
      for (double v : e.eigenvalues) det_eig *= v;
      std::function<double(const Matrix&)> det = [&](const Matrix& a) -> double {
        if (a.rows() == 1) return a(0, 0);
        double acc = 0.0;
        for (std::size_t c = 0; c < a.cols(); ++c) {
          Matrix minor(a.rows() - 1, a.cols() - 1);
          for (std::size_t i = 1; i < a.rows(); ++i) {
            std::size_t jc = 0;
            for (std::size_t j = 0; j < a.cols(); ++j) {
              if (j == c) continue;
              minor(i - 1, jc++) = a(i, j);
            }
          }
          acc += (c % 2 == 0 ? 1.0 : -1.0) * a(0, c) * det(minor);
        }
        return acc;
      };
      const double det_direct = det(m);
      const double scale = std::max({1.0, std::fabs(det_direct), std::fabs(det_eig)});
      CHECK(std::fabs(det_eig - det_direct) / scale < 1e-6);
    }
  }
}

TEST_CASE("quantiles with the p*(n-1) convention") {
  const std::vector<double> sample = {1, 2, 3, 4, 5};
  const std::vector<double> probs = {0.5, 0.25, 0.0, 1.0, 0.1};
  const std::vector<double> q = quantiles(sample, probs);
  CHECK(q[0] == doctest::Approx(3.0));
  CHECK(q[1] == doctest::Approx(2.0));  // position 0.25*4 = 1
  CHECK(q[2] == doctest::Approx(1.0));
  CHECK(q[3] == doctest::Approx(5.0));
  CHECK(q[4] == doctest::Approx(1.4));  // position 0.4 between 1 and 2

  const std::vector<double> singleton = {7.0};
  CHECK(quantiles(singleton, std::vector<double>{0.9})[0] == doctest::Approx(7.0));

  CHECK_THROWS_AS(quantiles(std::vector<double>{}, probs), UsageError);
  CHECK_THROWS_AS(quantiles(sample, std::vector<double>{1.5}), UsageError);
}

TEST_CASE("quantiles are monotone in the probability") {
  TestRng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> sample(1 + rng.index(40));
    for (double& v : sample) v = rng.uniform(-5, 5);
    std::vector<double> probs(11);
    for (std::size_t i = 0; i < probs.size(); ++i) probs[i] = static_cast<double>(i) / 10.0;
    const std::vector<double> q = quantiles(sample, probs);
    for (std::size_t i = 0; i + 1 < q.size(); ++i) CHECK(q[i] <= q[i + 1]);
  }
}
