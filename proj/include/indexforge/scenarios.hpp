#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>

#include "indexforge/dataset.hpp"
#include "indexforge/matrix.hpp"

namespace indexforge {

enum class ScenarioKind { Normal, NormalMixed, NormalCorrelated, SystemicCorrelated };

std::string_view scenario_name(ScenarioKind k);  // "normal", "normal-mixed", ...
std::optional<ScenarioKind> parse_scenario(std::string_view name);

struct ScenarioParams {
  double mu = 1.0;
  double sigma = 1.0;
  double sigma_high = 2.0;            // NormalMixed: stddev of the leading block
  std::size_t correlated_block = 3;   // leading block size (clamped to n)
  double covariance = 0.99;           // pairwise covariance inside the block, unit variances
  double tri_lower = 0.0;             // support of the SystemicCorrelated marginals
  double tri_upper = 1.0;
};

struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::Normal;
  std::size_t systems = 20;
  std::size_t indicators = 5;
  ScenarioParams params;

  bool has_correlated_block() const {
    return kind == ScenarioKind::NormalCorrelated || kind == ScenarioKind::SystemicCorrelated;
  }
  std::size_t effective_block() const;
  void validate() const;  // throws UsageError
};

// Deterministic stream: mt19937_64 for uniforms (top 53 bits), Marsaglia's
// polar method for normals. Identical seed => identical stream on every
// platform with the same floating-point semantics.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64";
  static constexpr std::string_view kNormalTransform = "marsaglia-polar";

  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // uniform on [0, 1): (x >> 11) * 2^-53
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double standard_normal();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// splitmix64 finalizer over base_seed + (index+1) * golden ratio increment;
// gives every Monte Carlo iteration an independent, thread-count-free stream.
std::uint64_t derive_stream_seed(std::uint64_t base_seed, std::uint64_t index);

// Inverse CDF of the triangular distribution on [lower, upper] with the given
// mode. u must lie in [0, 1].
double triangular_inverse_cdf(double u, double lower, double mode, double upper);

double standard_normal_cdf(double z);

// mean + L.z with L = cholesky(covariance) and z standard normal.
std::vector<double> sample_mvn(std::span<const double> mean, const Matrix& covariance, Rng& rng);
// Same draw with a precomputed Cholesky factor.
std::vector<double> sample_mvn_chol(std::span<const double> mean, const Matrix& chol_lower,
                                    Rng& rng);

// Draws one unscaled m x n indicator matrix. System ids are "s1..sm",
// indicator names "X1..Xn"; entries are drawn row-major.
IndicatorMatrix generate(const ScenarioSpec& spec, Rng& rng);

}  // namespace indexforge
