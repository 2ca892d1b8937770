#include "indexforge/weighting.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "indexforge/errors.hpp"
#include "indexforge/linalg.hpp"
#include "indexforge/lp.hpp"
#include "indexforge/stats.hpp"

namespace indexforge {

namespace {

constexpr double kDegenerateTol = 1e-12;

void require_scaled(const IndicatorMatrix& m, const char* op) {
  if (!m.scaled) throw UsageError(std::string(op) + " requires min-max scaled input");
}

std::vector<double> normalize_simplex(std::vector<double> raw, const char* what) {
  double sum = 0.0;
  for (double v : raw) sum += v;
  if (sum <= kDegenerateTol) {
    throw DegenerateDataError(std::string(what) + ": total information is zero");
  }
  for (double& v : raw) v /= sum;
  return raw;
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Var: return "VAR";
    case Method::Ent: return "ENT";
    case Method::Pca: return "PCA";
    case Method::Critic: return "CRITIC";
    case Method::Dea: return "DEA";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (Method m : kAllMethods) {
    if (upper == method_name(m)) return m;
  }
  return std::nullopt;
}

WeightVector inverse_variance_weights(const IndicatorMatrix& m) {
  require_scaled(m, "inverse_variance_weights");
  std::vector<double> raw(m.indicators());
  for (std::size_t c = 0; c < m.indicators(); ++c) {
    const ColumnStats s = column_stats(m.values, c);
    if (s.variance <= kDegenerateTol) {
      throw DegenerateDataError("inverse-variance: indicator '" + m.indicator_names[c] +
                                "' has zero variance");
    }
    raw[c] = 1.0 / s.variance;
  }
  return {normalize_simplex(std::move(raw), "inverse-variance"), Method::Var,
          m.indicator_names};
}

std::pair<WeightVector, EntropyStats> entropy_weights(const IndicatorMatrix& m, double epsilon,
                                                      std::vector<std::string>* warnings) {
  require_scaled(m, "entropy_weights");
  if (m.systems() < 2) throw UsageError("entropy_weights requires at least 2 systems");
  if (!(epsilon > 0.0)) throw UsageError("entropy epsilon must be positive");

  const std::size_t rows = m.systems();
  const std::size_t cols = m.indicators();
  const double inv_log_m = 1.0 / std::log(static_cast<double>(rows));

  EntropyStats stats;
  stats.proportions = Matrix(rows, cols);
  stats.entropies.resize(cols);
  stats.epsilon = epsilon;

  std::vector<double> raw(cols, 0.0);
  for (std::size_t c = 0; c < cols; ++c) {
    double total = 0.0;
    for (std::size_t r = 0; r < rows; ++r) total += m.values(r, c);
    if (total <= 0.0) {
      // all-zero column: no information at all, treated as maximal entropy
      stats.entropies[c] = 1.0;
      raw[c] = 0.0;
      if (warnings) {
        warnings->push_back("indicator '" + m.indicator_names[c] +
                            "' is all zeros; assigned entropy 1 (zero weight)");
      }
      continue;
    }
    double h = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
      const double p = m.values(r, c) / total;
      stats.proportions(r, c) = p;
      h += p * std::log(p + epsilon);
    }
    h *= -inv_log_m;
    h = std::max(h, 0.0);  // ln(1+eps) > 0 pushes a one-hot column slightly negative
    stats.entropies[c] = h;
    raw[c] = std::max(1.0 - h, 0.0);
  }

  double divergence = 0.0;
  for (double v : raw) divergence += v;
  if (divergence <= kDegenerateTol) {
    throw DegenerateDataError("entropy: all indicators are maximally uniform (sum of 1-H is 0)");
  }
  WeightVector w{normalize_simplex(std::move(raw), "entropy"), Method::Ent, m.indicator_names};
  return {std::move(w), std::move(stats)};
}

PcaDecomposition pca_decompose(const IndicatorMatrix& m) {
  require_scaled(m, "pca_decompose");
  if (m.systems() < 2) throw UsageError("pca_decompose requires at least 2 systems");

  const Matrix cov = covariance_matrix(m.values);
  const EigenResult eig = symmetric_eigendecomposition(cov);

  PcaDecomposition d;
  d.eigenvalues = eig.eigenvalues;
  d.loadings = transpose(eig.eigenvectors);  // row j = loading vector of component j
  d.column_means = column_means(m.values);
  d.indicator_names = m.indicator_names;
  return d;
}

WeightVector pca_weights(const PcaDecomposition& d, std::size_t components) {
  const std::size_t n = d.eigenvalues.size();
  if (components < 1 || components > n) {
    throw UsageError("pca_weights: components must lie in [1, " + std::to_string(n) + "]");
  }
  double retained = 0.0;
  for (std::size_t j = 0; j < components; ++j) retained += std::max(d.eigenvalues[j], 0.0);
  if (retained <= kDegenerateTol) {
    throw DegenerateDataError("pca: retained components carry no variance");
  }
  std::vector<double> raw(n, 0.0);
  for (std::size_t j = 0; j < components; ++j) {
    const double lambda = std::max(d.eigenvalues[j], 0.0);
    for (std::size_t i = 0; i < n; ++i) raw[i] += std::fabs(d.loadings(j, i)) * lambda;
  }
  return {normalize_simplex(std::move(raw), "pca"), Method::Pca, d.indicator_names};
}

std::vector<double> first_pc_index(const PcaDecomposition& d, const IndicatorMatrix& m) {
  require_scaled(m, "first_pc_index");
  if (m.indicators() != d.eigenvalues.size()) {
    throw UsageError("first_pc_index: decomposition does not match the matrix");
  }
  if (d.eigenvalues.empty() || d.eigenvalues[0] <= kDegenerateTol) {
    throw DegenerateDataError("first_pc_index: first eigenvalue is zero");
  }
  std::vector<double> projection(m.systems());
  for (std::size_t r = 0; r < m.systems(); ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < m.indicators(); ++c) {
      acc += (m.values(r, c) - d.column_means[c]) * d.loadings(0, c);
    }
    projection[r] = acc;
  }
  const auto [lo_it, hi_it] = std::minmax_element(projection.begin(), projection.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (lo == hi) {
    throw DegenerateDataError("first_pc_index: projections are constant");
  }
  for (double& v : projection) v = (v - lo) / (hi - lo);
  return projection;
}

std::pair<WeightVector, CriticStats> critic_weights(const IndicatorMatrix& m,
                                                    std::vector<std::string>* warnings) {
  require_scaled(m, "critic_weights");
  if (m.systems() < 2) throw UsageError("critic_weights requires at least 2 systems");

  const std::size_t n = m.indicators();
  CriticStats stats;
  stats.stddevs.resize(n);
  for (std::size_t c = 0; c < n; ++c) stats.stddevs[c] = column_stats(m.values, c).stddev;
  stats.correlation = pearson_correlation_matrix(m.values, warnings);

  stats.conflict.resize(n);
  stats.information.resize(n);
  std::vector<double> raw(n);
  for (std::size_t i = 0; i < n; ++i) {
    double conflict = 0.0;
    for (std::size_t j = 0; j < n; ++j) conflict += 1.0 - std::fabs(stats.correlation(i, j));
    stats.conflict[i] = conflict;
    stats.information[i] = stats.stddevs[i] * conflict;
    raw[i] = stats.information[i];
  }
  double total = 0.0;
  for (double v : raw) total += v;
  if (total <= kDegenerateTol) {
    throw DegenerateDataError(
        "critic: no information (all indicators constant or perfectly correlated)");
  }
  WeightVector w{normalize_simplex(std::move(raw), "critic"), Method::Critic,
                 m.indicator_names};
  return {std::move(w), std::move(stats)};
}

DeaResult dea_weights(const IndicatorMatrix& m, double epsilon) {
  require_scaled(m, "dea_weights");
  if (!(epsilon > 0.0)) throw UsageError("dea epsilon must be positive");

  bool any_positive = false;
  for (double v : m.values.entries()) {
    if (v > 0.0) any_positive = true;
  }
  if (!any_positive) throw DegenerateDataError("dea: all indicator values are zero");

  const std::size_t rows = m.systems();
  const std::size_t cols = m.indicators();

  DeaResult result;
  result.epsilon = epsilon;
  result.per_dmu_weights = Matrix(rows, cols);
  result.efficiencies.resize(rows);

  LpProblem p;
  p.constraints = m.values;
  p.rhs.assign(rows, 1.0);
  p.lower_bounds.assign(cols, epsilon);
  for (std::size_t k = 0; k < rows; ++k) {
    p.objective.assign(cols, 0.0);
    for (std::size_t c = 0; c < cols; ++c) p.objective[c] = m.values(k, c);

    const LpSolution solution = solve(p);
    if (solution.status == LpStatus::Infeasible) {
      throw ConfigError("dea: epsilon " + std::to_string(epsilon) +
                        " is infeasible for this data; try a smaller --dea-epsilon");
    }
    if (solution.status != LpStatus::Optimal) {
      throw NumericError("dea: unexpected unbounded program for DMU " + m.system_ids[k]);
    }
    for (std::size_t c = 0; c < cols; ++c) result.per_dmu_weights(k, c) = solution.variables[c];
    result.efficiencies[k] = solution.objective_value;
  }

  std::vector<double> averaged(cols, 0.0);
  for (std::size_t c = 0; c < cols; ++c) {
    double acc = 0.0;
    for (std::size_t k = 0; k < rows; ++k) acc += result.per_dmu_weights(k, c);
    averaged[c] = acc / static_cast<double>(rows);
  }
  result.averaged_weights = {normalize_simplex(std::move(averaged), "dea"), Method::Dea,
                             m.indicator_names};
  return result;
}

std::vector<double> dea_efficiency(const Matrix& inputs, const Matrix& outputs, double epsilon) {
  if (inputs.rows() != outputs.rows()) {
    throw UsageError("dea_efficiency: inputs and outputs must cover the same DMUs");
  }
  if (inputs.rows() == 0 || inputs.cols() == 0 || outputs.cols() == 0) {
    throw UsageError("dea_efficiency: empty inputs or outputs");
  }
  if (!(epsilon > 0.0)) throw UsageError("dea epsilon must be positive");
  for (double v : inputs.entries()) {
    if (v < 0.0) throw UsageError("dea_efficiency: negative input value");
  }
  for (double v : outputs.entries()) {
    if (v < 0.0) throw UsageError("dea_efficiency: negative output value");
  }

  const std::size_t m = inputs.rows();
  const std::size_t q = inputs.cols();
  const std::size_t s = outputs.cols();
  for (std::size_t k = 0; k < m; ++k) {
    bool positive = false;
    for (std::size_t i = 0; i < q; ++i) {
      if (inputs(k, i) > 0.0) positive = true;
    }
    if (!positive) {
      throw DegenerateDataError("dea_efficiency: DMU " + std::to_string(k) +
                                " has all-zero inputs");
    }
  }

  // Variables [u_1..u_s, v_1..v_q]. The normalization v.z_k = 1 becomes a
  // pair of opposing inequalities.
  std::vector<double> thetas(m);
  for (std::size_t k = 0; k < m; ++k) {
    Matrix a(m + 2, s + q);
    std::vector<double> rhs(m + 2, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t r = 0; r < s; ++r) a(j, r) = outputs(j, r);
      for (std::size_t i = 0; i < q; ++i) a(j, s + i) = -inputs(j, i);
    }
    for (std::size_t i = 0; i < q; ++i) {
      a(m, s + i) = inputs(k, i);
      a(m + 1, s + i) = -inputs(k, i);
    }
    rhs[m] = 1.0;
    rhs[m + 1] = -1.0;

    LpProblem p;
    p.constraints = std::move(a);
    p.rhs = std::move(rhs);
    p.objective.assign(s + q, 0.0);
    for (std::size_t r = 0; r < s; ++r) p.objective[r] = outputs(k, r);
    p.lower_bounds.assign(s + q, epsilon);

    const LpSolution solution = solve(p);
    if (solution.status == LpStatus::Infeasible) {
      throw ConfigError("dea_efficiency: epsilon " + std::to_string(epsilon) +
                        " is infeasible for this data; try a smaller value");
    }
    if (solution.status != LpStatus::Optimal) {
      throw NumericError("dea_efficiency: unexpected unbounded program for DMU " +
                         std::to_string(k));
    }
    thetas[k] = solution.objective_value;
  }
  return thetas;
}

std::vector<double> composite_index(const IndicatorMatrix& m, const WeightVector& w) {
  require_scaled(m, "composite_index");
  if (w.weights.size() != m.indicators()) {
    throw UsageError("composite_index: weight count does not match indicator count");
  }
  std::vector<double> index(m.systems());
  for (std::size_t r = 0; r < m.systems(); ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < m.indicators(); ++c) acc += w.weights[c] * m.values(r, c);
    index[r] = std::clamp(acc, 0.0, 1.0);
  }
  return index;
}

std::vector<RankedSystem> rank_systems(std::span<const double> index,
                                       std::span<const std::string> ids) {
  if (index.size() != ids.size()) {
    throw UsageError("rank_systems: index and id counts differ");
  }
  std::vector<RankedSystem> ranked(index.size());
  for (std::size_t i = 0; i < index.size(); ++i) ranked[i] = {ids[i], index[i], 0, false};
  std::sort(ranked.begin(), ranked.end(), [](const RankedSystem& a, const RankedSystem& b) {
    if (a.index != b.index) return a.index > b.index;
    return a.id < b.id;
  });
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    ranked[i].rank = i + 1;
    const bool tie_prev = i > 0 && ranked[i - 1].index == ranked[i].index;
    const bool tie_next = i + 1 < ranked.size() && ranked[i + 1].index == ranked[i].index;
    ranked[i].tied = tie_prev || tie_next;
  }
  return ranked;
}

}  // namespace indexforge
