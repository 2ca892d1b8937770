#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "indexforge/dataset.hpp"
#include "indexforge/matrix.hpp"

namespace indexforge {

enum class Method { Var, Ent, Pca, Critic, Dea };

inline constexpr std::array<Method, 5> kAllMethods = {
    Method::Var, Method::Ent, Method::Pca, Method::Critic, Method::Dea};

std::string_view method_name(Method m);                     // "VAR", "ENT", ...
std::optional<Method> parse_method(std::string_view name);  // case-insensitive

// n non-negative weights summing to one, tagged with the originating method.
struct WeightVector {
  std::vector<double> weights;
  Method method = Method::Var;
  std::vector<std::string> indicator_names;
};

struct EntropyStats {
  Matrix proportions;             // p(x_ik), one column per indicator
  std::vector<double> entropies;  // H(X_i), clamped into [0, 1]
  double epsilon = 0.0;
};

struct PcaDecomposition {
  std::vector<double> eigenvalues;  // non-increasing
  Matrix loadings;                  // row j = unit loading vector of component j
  std::vector<double> column_means;
  std::vector<std::string> indicator_names;
};

struct CriticStats {
  std::vector<double> stddevs;
  Matrix correlation;
  std::vector<double> conflict;     // C_i = sum_j (1 - |r_ij|)
  std::vector<double> information;  // I_i = stddev_i * C_i
};

struct DeaResult {
  Matrix per_dmu_weights;  // m x n, w_ik* from each DMU's own program
  std::vector<double> efficiencies;
  WeightVector averaged_weights;
  double epsilon = 0.0;
};

// w_i proportional to 1 / variance_i on the scaled columns. Zero-variance
// columns (variance <= 1e-12) raise DegenerateDataError naming the column.
WeightVector inverse_variance_weights(const IndicatorMatrix& m);

// Proportions p = x / column-sum, entropy H = -(1/ln m) sum p ln(p + eps),
// weights proportional to 1 - H. An all-zero column is assigned H = 1 (zero
// information) with a warning.
std::pair<WeightVector, EntropyStats> entropy_weights(const IndicatorMatrix& m,
                                                      double epsilon = 1e-12,
                                                      std::vector<std::string>* warnings = nullptr);

// Eigendecomposition of the sample covariance matrix of the scaled columns.
PcaDecomposition pca_decompose(const IndicatorMatrix& m);

// w_i proportional to sum over the retained components of |a_ji| * lambda_j.
// Absolute loadings keep the weights on the simplex; the convention is
// surfaced in report metadata as "pca_loading_convention: absolute".
WeightVector pca_weights(const PcaDecomposition& d, std::size_t components);

// Projects mean-centered rows onto the first loading vector and min-max
// scales the projections to [0, 1].
std::vector<double> first_pc_index(const PcaDecomposition& d, const IndicatorMatrix& m);

// sigma_i times the conflict score C_i = sum_j (1 - |r_ij|), normalized.
std::pair<WeightVector, CriticStats> critic_weights(const IndicatorMatrix& m,
                                                    std::vector<std::string>* warnings = nullptr);

// Per DMU k: maximize sum_i w_i x_ik subject to sum_i w_i x_ij <= 1 for all j
// and w_i >= epsilon, then average the per-DMU optima and normalize.
DeaResult dea_weights(const IndicatorMatrix& m, double epsilon = 1e-6);

// CCR efficiency for general input/output data: maximize u.y_k subject to
// v.z_k = 1, u.y_j - v.z_j <= 0 for all j, u,v >= epsilon.
std::vector<double> dea_efficiency(const Matrix& inputs, const Matrix& outputs, double epsilon);

// I_k = sum_i w_i x_ik on the scaled matrix; results clamped into [0, 1].
std::vector<double> composite_index(const IndicatorMatrix& m, const WeightVector& w);

struct RankedSystem {
  std::string id;
  double index = 0.0;
  std::size_t rank = 0;  // 1-based position in descending order
  bool tied = false;
};

// Descending by index, exact ties broken by ascending id and flagged.
std::vector<RankedSystem> rank_systems(std::span<const double> index,
                                       std::span<const std::string> ids);

}  // namespace indexforge
