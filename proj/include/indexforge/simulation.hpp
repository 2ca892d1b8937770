#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "indexforge/scenarios.hpp"
#include "indexforge/weighting.hpp"

namespace indexforge {

struct SimulationConfig {
  ScenarioSpec scenario;
  std::size_t iterations = 100;
  std::vector<Method> methods{kAllMethods.begin(), kAllMethods.end()};
  std::size_t pca_components = 0;  // 0: 1 component for correlated scenarios, else 3
  double entropy_epsilon = 1e-12;
  double dea_epsilon = 1e-6;
  std::uint64_t base_seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency

  std::size_t resolved_pca_components() const;
  void validate() const;
};

struct FailureRecord {
  std::size_t iteration = 0;
  Method method = Method::Var;
  std::string message;
};

// Weight rows from the iterations where a method succeeded, in iteration order.
struct MethodSamples {
  Method method = Method::Var;
  std::vector<std::size_t> iterations;
  Matrix weights;  // successes x indicators
};

struct WeightSamples {
  std::vector<std::string> indicator_names;
  std::vector<MethodSamples> per_method;  // in config method order
  std::vector<FailureRecord> failures;    // ordered by iteration, then method
  std::size_t iterations_attempted = 0;
  std::size_t correlated_block = 0;  // 0 when the scenario has no correlated block

  const MethodSamples& samples_for(Method m) const;
};

struct BoxStats {
  double min = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, max = 0.0, mean = 0.0;
  std::size_t count = 0;
};

struct BoxplotSummary {
  std::vector<Method> methods;
  std::vector<std::string> indicator_names;
  std::vector<std::vector<BoxStats>> cells;  // [method][indicator]

  const std::vector<BoxStats>& row_for(Method m) const;
};

// generate -> min_max_scale -> weights, per iteration; iteration i draws its
// stream from derive_stream_seed(base_seed, i), so results are independent of
// the thread count. A method that fails on an iteration is logged and
// excluded from that method's summary; a method that fails on every iteration
// raises AggregateError.
std::pair<WeightSamples, BoxplotSummary> run_simulation(const SimulationConfig& cfg);

BoxplotSummary summarize(const WeightSamples& samples);

struct MethodDivergence {
  Method method = Method::Var;
  double weight_spread = 0.0;  // max mean - min mean across indicators
  std::vector<double> iqr;     // per indicator
  double block_contrast = 0.0;  // mean weight over the correlated block minus the rest
};

struct DivergenceReport {
  std::size_t correlated_block = 0;
  std::vector<MethodDivergence> methods;
};

// Purely descriptive method comparison; requires at least two methods.
DivergenceReport compare_methods(const WeightSamples& samples);

// Long-form CSV: iteration,method,indicator,weight
std::string samples_to_csv(const WeightSamples& samples);

// method,indicator,count,min,q1,median,q3,max,mean
std::string summary_to_csv(const BoxplotSummary& summary);
BoxplotSummary summary_from_csv(std::istream& in);

}  // namespace indexforge
