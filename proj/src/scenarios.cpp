#include "indexforge/scenarios.hpp"

#include <algorithm>
#include <cmath>

#include "indexforge/errors.hpp"
#include "indexforge/linalg.hpp"

namespace indexforge {

std::string_view scenario_name(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::Normal: return "normal";
    case ScenarioKind::NormalMixed: return "normal-mixed";
    case ScenarioKind::NormalCorrelated: return "normal-correlated";
    case ScenarioKind::SystemicCorrelated: return "systemic-correlated";
  }
  return "?";
}

std::optional<ScenarioKind> parse_scenario(std::string_view name) {
  for (ScenarioKind k : {ScenarioKind::Normal, ScenarioKind::NormalMixed,
                         ScenarioKind::NormalCorrelated, ScenarioKind::SystemicCorrelated}) {
    if (name == scenario_name(k)) return k;
  }
  return std::nullopt;
}

std::size_t ScenarioSpec::effective_block() const {
  return std::min(params.correlated_block, indicators);
}

void ScenarioSpec::validate() const {
  if (systems < 2) throw UsageError("scenario needs at least 2 systems");
  if (indicators < 1) throw UsageError("scenario needs at least 1 indicator");
  if (!(params.covariance > -1.0 && params.covariance < 1.0)) {
    throw UsageError("block covariance must lie in (-1, 1)");
  }
  if (!(params.sigma > 0.0) || !(params.sigma_high > 0.0)) {
    throw UsageError("scenario sigmas must be positive");
  }
  if (!(params.tri_lower < params.tri_upper)) {
    throw UsageError("triangular bounds must satisfy lower < upper");
  }
}

double Rng::standard_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  for (;;) {
    const double u = 2.0 * uniform() - 1.0;
    const double v = 2.0 * uniform() - 1.0;
    const double s = u * u + v * v;
    if (s >= 1.0 || s == 0.0) continue;
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }
}

std::uint64_t derive_stream_seed(std::uint64_t base_seed, std::uint64_t index) {
  std::uint64_t z = base_seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double triangular_inverse_cdf(double u, double lower, double mode, double upper) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw UsageError("triangular_inverse_cdf: u outside [0, 1]");
  }
  if (!(lower <= mode && mode <= upper && lower < upper)) {
    throw UsageError("triangular_inverse_cdf: need lower <= mode <= upper, lower < upper");
  }
  const double range = upper - lower;
  const double split = (mode - lower) / range;
  if (u <= split) {
    return lower + std::sqrt(u * range * (mode - lower));
  }
  return upper - std::sqrt((1.0 - u) * range * (upper - mode));
}

double standard_normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

std::vector<double> sample_mvn_chol(std::span<const double> mean, const Matrix& chol_lower,
                                    Rng& rng) {
  const std::size_t n = mean.size();
  if (chol_lower.rows() != n || chol_lower.cols() != n) {
    throw UsageError("sample_mvn: mean and covariance dimensions differ");
  }
  std::vector<double> z(n);
  for (double& v : z) v = rng.standard_normal();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = mean[i];
    for (std::size_t j = 0; j <= i; ++j) acc += chol_lower(i, j) * z[j];
    out[i] = acc;
  }
  return out;
}

std::vector<double> sample_mvn(std::span<const double> mean, const Matrix& covariance,
                               Rng& rng) {
  return sample_mvn_chol(mean, cholesky(covariance), rng);
}

namespace {

Matrix block_correlation(std::size_t n, std::size_t block, double covariance) {
  Matrix cov = Matrix::identity(n);
  for (std::size_t i = 0; i < block; ++i) {
    for (std::size_t j = i + 1; j < block; ++j) {
      cov(i, j) = covariance;
      cov(j, i) = covariance;
    }
  }
  return cov;
}

std::vector<std::string> numbered(const char* prefix, std::size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

IndicatorMatrix generate(const ScenarioSpec& spec, Rng& rng) {
  spec.validate();
  const std::size_t m = spec.systems;
  const std::size_t n = spec.indicators;
  const ScenarioParams& prm = spec.params;
  const std::size_t block = spec.effective_block();

  Matrix values(m, n);
  switch (spec.kind) {
    case ScenarioKind::Normal: {
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c)
          values(r, c) = prm.mu + prm.sigma * rng.standard_normal();
      break;
    }
    case ScenarioKind::NormalMixed: {
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          const double sigma = c < block ? prm.sigma_high : prm.sigma;
          values(r, c) = prm.mu + sigma * rng.standard_normal();
        }
      }
      break;
    }
    case ScenarioKind::NormalCorrelated: {
      const Matrix chol = cholesky(block_correlation(n, block, prm.covariance));
      const std::vector<double> mean(n, prm.mu);
      for (std::size_t r = 0; r < m; ++r) {
        const std::vector<double> row = sample_mvn_chol(mean, chol, rng);
        for (std::size_t c = 0; c < n; ++c) values(r, c) = row[c];
      }
      break;
    }
    case ScenarioKind::SystemicCorrelated: {
      // Modes drawn from Tri(lower, midpoint, upper), sorted so the implied
      // marginal means are strictly ordered across indicators.
      const double mid = 0.5 * (prm.tri_lower + prm.tri_upper);
      std::vector<double> modes(n);
      for (double& mode : modes) {
        mode = triangular_inverse_cdf(rng.uniform(), prm.tri_lower, mid, prm.tri_upper);
      }
      std::sort(modes.begin(), modes.end());

      const Matrix chol = cholesky(block_correlation(n, block, prm.covariance));
      const std::vector<double> zero(n, 0.0);
      for (std::size_t r = 0; r < m; ++r) {
        const std::vector<double> z = sample_mvn_chol(zero, chol, rng);
        for (std::size_t c = 0; c < n; ++c) {
          const double u = standard_normal_cdf(z[c]);
          values(r, c) = triangular_inverse_cdf(u, prm.tri_lower, modes[c], prm.tri_upper);
        }
      }
      break;
    }
  }

  return make_indicator_matrix(numbered("s", m), numbered("X", n), std::move(values), false);
}

}  // namespace indexforge
