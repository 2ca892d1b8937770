#include "indexforge/stats.hpp"

#include <algorithm>
#include <cmath>

#include "indexforge/errors.hpp"

namespace indexforge {

ColumnStats column_stats(const Matrix& m, std::size_t col) {
  if (col >= m.cols()) {
    throw UsageError("column index " + std::to_string(col) + " out of range (cols=" +
                     std::to_string(m.cols()) + ")");
  }
  if (m.rows() < 1) throw UsageError("column_stats requires at least one row");

  const std::size_t n = m.rows();
  double sum = 0.0;
  for (std::size_t r = 0; r < n; ++r) sum += m(r, col);
  const double mean = sum / static_cast<double>(n);

  double ss = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    const double d = m(r, col) - mean;
    ss += d * d;
  }
  const double variance = n >= 2 ? ss / static_cast<double>(n - 1) : 0.0;
  return {mean, variance, std::sqrt(variance)};
}

std::vector<double> column_means(const Matrix& m) {
  std::vector<double> out(m.cols(), 0.0);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) sum += m(r, c);
    out[c] = sum / static_cast<double>(m.rows());
  }
  return out;
}

Matrix covariance_matrix(const Matrix& m) {
  if (m.rows() < 2) throw UsageError("covariance_matrix requires at least 2 rows");
  const std::size_t n = m.cols();
  const std::vector<double> means = column_means(m);
  Matrix cov(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        acc += (m(r, i) - means[i]) * (m(r, j) - means[j]);
      }
      const double v = acc / static_cast<double>(m.rows() - 1);
      cov(i, j) = v;
      cov(j, i) = v;
    }
  }
  return cov;
}

Matrix pearson_correlation_matrix(const Matrix& m, std::vector<std::string>* warnings) {
  if (m.rows() < 2) throw UsageError("correlation requires at least 2 rows");
  const std::size_t n = m.cols();
  const std::vector<double> means = column_means(m);

  std::vector<double> sd(n, 0.0);
  std::vector<bool> constant(n, false);
  for (std::size_t c = 0; c < n; ++c) {
    double ss = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const double d = m(r, c) - means[c];
      ss += d * d;
    }
    if (ss == 0.0) {
      constant[c] = true;
      if (warnings) {
        warnings->push_back("column " + std::to_string(c) +
                            " has zero variance; correlations set to 0");
      }
    }
    sd[c] = std::sqrt(ss);  // unnormalized; ratios cancel the denominator
  }

  Matrix corr(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    corr(i, i) = constant[i] ? 0.0 : 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      double r = 0.0;
      if (!constant[i] && !constant[j]) {
        double acc = 0.0;
        for (std::size_t k = 0; k < m.rows(); ++k) {
          acc += (m(k, i) - means[i]) * (m(k, j) - means[j]);
        }
        r = acc / (sd[i] * sd[j]);
        r = std::clamp(r, -1.0, 1.0);
      }
      corr(i, j) = r;
      corr(j, i) = r;
    }
  }
  return corr;
}

std::vector<double> quantiles(std::span<const double> sample, std::span<const double> probs) {
  if (sample.empty()) throw UsageError("quantiles: empty sample");
  for (double p : probs) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw UsageError("quantiles: probability " + std::to_string(p) + " outside [0, 1]");
    }
  }
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());

  std::vector<double> out;
  out.reserve(probs.size());
  const std::size_t n = sorted.size();
  for (double p : probs) {
    const double pos = p * static_cast<double>(n - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, n - 1);
    const double frac = pos - static_cast<double>(lo);
    out.push_back(sorted[lo] + frac * (sorted[hi] - sorted[lo]));
  }
  return out;
}

double mean_of(std::span<const double> sample) {
  if (sample.empty()) throw UsageError("mean_of: empty sample");
  double sum = 0.0;
  for (double v : sample) sum += v;
  return sum / static_cast<double>(sample.size());
}

}  // namespace indexforge
