#include "indexforge/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <optional>
#include <thread>
#include <utility>

#include "indexforge/errors.hpp"
#include "indexforge/io_util.hpp"
#include "indexforge/stats.hpp"

namespace indexforge {

std::size_t SimulationConfig::resolved_pca_components() const {
  if (pca_components != 0) return pca_components;
  if (scenario.has_correlated_block()) return 1;
  return std::min<std::size_t>(3, scenario.indicators);
}

void SimulationConfig::validate() const {
  scenario.validate();
  if (iterations < 1) throw UsageError("simulation needs at least 1 iteration");
  if (methods.empty()) throw UsageError("simulation needs at least one method");
  for (std::size_t i = 0; i < methods.size(); ++i) {
    for (std::size_t j = i + 1; j < methods.size(); ++j) {
      if (methods[i] == methods[j]) throw UsageError("duplicate method in configuration");
    }
  }
  const std::size_t comps = resolved_pca_components();
  if (comps < 1 || comps > scenario.indicators) {
    throw UsageError("pca components must lie in [1, " + std::to_string(scenario.indicators) +
                     "]");
  }
  if (!(entropy_epsilon > 0.0)) throw UsageError("entropy epsilon must be positive");
  if (!(dea_epsilon > 0.0)) throw UsageError("dea epsilon must be positive");
}

const MethodSamples& WeightSamples::samples_for(Method m) const {
  for (const auto& ms : per_method) {
    if (ms.method == m) return ms;
  }
  throw UsageError("no samples for method " + std::string(method_name(m)));
}

const std::vector<BoxStats>& BoxplotSummary::row_for(Method m) const {
  for (std::size_t i = 0; i < methods.size(); ++i) {
    if (methods[i] == m) return cells[i];
  }
  throw UsageError("no summary for method " + std::string(method_name(m)));
}

namespace {

struct IterationResult {
  std::vector<std::optional<std::vector<double>>> weights;  // per configured method
  std::vector<std::pair<std::size_t, std::string>> failures;  // method position -> message
  std::vector<std::string> indicator_names;
};

std::vector<double> weights_for(Method method, const IndicatorMatrix& scaled,
                                const SimulationConfig& cfg, std::size_t pca_components) {
  switch (method) {
    case Method::Var:
      return inverse_variance_weights(scaled).weights;
    case Method::Ent:
      return entropy_weights(scaled, cfg.entropy_epsilon).first.weights;
    case Method::Pca:
      return pca_weights(pca_decompose(scaled), pca_components).weights;
    case Method::Critic:
      return critic_weights(scaled).first.weights;
    case Method::Dea:
      return dea_weights(scaled, cfg.dea_epsilon).averaged_weights.weights;
  }
  throw UsageError("unknown method");
}

IterationResult run_iteration(const SimulationConfig& cfg, std::size_t iteration,
                              std::size_t pca_components) {
  IterationResult out;
  out.weights.resize(cfg.methods.size());

  Rng rng(derive_stream_seed(cfg.base_seed, iteration));
  const IndicatorMatrix raw = generate(cfg.scenario, rng);
  const IndicatorMatrix scaled = min_max_scale(raw);
  out.indicator_names = scaled.indicator_names;

  for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
    try {
      out.weights[mi] = weights_for(cfg.methods[mi], scaled, cfg, pca_components);
    } catch (const ConfigError& e) {
      out.failures.emplace_back(mi, e.what());
    } catch (const UsageError&) {
      throw;  // a usage error here is a bug, not a bad draw
    } catch (const Error& e) {
      out.failures.emplace_back(mi, e.what());
    }
  }
  return out;
}

}  // namespace

std::pair<WeightSamples, BoxplotSummary> run_simulation(const SimulationConfig& cfg) {
  cfg.validate();
  const std::size_t iters = cfg.iterations;
  const std::size_t comps = cfg.resolved_pca_components();

  std::vector<IterationResult> slots(iters);
  std::size_t threads = cfg.threads != 0
                            ? cfg.threads
                            : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, iters);

  if (threads <= 1) {
    for (std::size_t i = 0; i < iters; ++i) slots[i] = run_iteration(cfg, i, comps);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= iters) return;
            slots[i] = run_iteration(cfg, i, comps);
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  WeightSamples samples;
  samples.indicator_names = slots[0].indicator_names;
  samples.iterations_attempted = iters;
  samples.correlated_block =
      cfg.scenario.has_correlated_block() ? cfg.scenario.effective_block() : 0;

  const std::size_t n = samples.indicator_names.size();
  for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
    MethodSamples ms;
    ms.method = cfg.methods[mi];
    std::vector<double> flat;
    for (std::size_t i = 0; i < iters; ++i) {
      if (slots[i].weights[mi]) {
        ms.iterations.push_back(i);
        flat.insert(flat.end(), slots[i].weights[mi]->begin(), slots[i].weights[mi]->end());
      }
    }
    ms.weights = Matrix(ms.iterations.size(), n, std::move(flat));
    samples.per_method.push_back(std::move(ms));
  }
  for (std::size_t i = 0; i < iters; ++i) {
    for (const auto& [mi, message] : slots[i].failures) {
      samples.failures.push_back({i, cfg.methods[mi], message});
    }
  }

  for (const auto& ms : samples.per_method) {
    if (ms.iterations.empty()) {
      std::string first = "unknown failure";
      for (const auto& f : samples.failures) {
        if (f.method == ms.method) {
          first = f.message;
          break;
        }
      }
      throw AggregateError("method " + std::string(method_name(ms.method)) + " failed in all " +
                           std::to_string(iters) + " iterations; first failure: " + first);
    }
  }

  BoxplotSummary summary = summarize(samples);
  return {std::move(samples), std::move(summary)};
}

BoxplotSummary summarize(const WeightSamples& samples) {
  static const std::vector<double> kProbs = {0.0, 0.25, 0.5, 0.75, 1.0};
  BoxplotSummary summary;
  summary.indicator_names = samples.indicator_names;
  for (const auto& ms : samples.per_method) {
    summary.methods.push_back(ms.method);
    std::vector<BoxStats> row(samples.indicator_names.size());
    for (std::size_t c = 0; c < samples.indicator_names.size(); ++c) {
      if (ms.weights.rows() == 0) continue;  // all-zero stats, count 0
      const std::vector<double> col = ms.weights.column(c);
      const std::vector<double> q = quantiles(col, kProbs);
      row[c] = {q[0], q[1], q[2], q[3], q[4], mean_of(col), ms.weights.rows()};
    }
    summary.cells.push_back(std::move(row));
  }
  return summary;
}

DivergenceReport compare_methods(const WeightSamples& samples) {
  if (samples.per_method.size() < 2) {
    throw UsageError("compare_methods requires at least two methods");
  }
  const std::size_t n = samples.indicator_names.size();
  const std::size_t block = samples.correlated_block;

  DivergenceReport report;
  report.correlated_block = block;
  for (const auto& ms : samples.per_method) {
    MethodDivergence d;
    d.method = ms.method;
    std::vector<double> means(n, 0.0);
    d.iqr.assign(n, 0.0);
    for (std::size_t c = 0; c < n; ++c) {
      if (ms.weights.rows() == 0) continue;
      const std::vector<double> col = ms.weights.column(c);
      means[c] = mean_of(col);
      static const std::vector<double> kIqrProbs = {0.25, 0.75};
      const std::vector<double> q = quantiles(col, kIqrProbs);
      d.iqr[c] = q[1] - q[0];
    }
    const auto [lo, hi] = std::minmax_element(means.begin(), means.end());
    d.weight_spread = *hi - *lo;
    if (block > 0 && block < n) {
      double in_block = 0.0;
      double outside = 0.0;
      for (std::size_t c = 0; c < n; ++c) (c < block ? in_block : outside) += means[c];
      d.block_contrast = in_block / static_cast<double>(block) -
                         outside / static_cast<double>(n - block);
    }
    report.methods.push_back(std::move(d));
  }
  return report;
}

std::string samples_to_csv(const WeightSamples& samples) {
  std::string out = "iteration,method,indicator,weight\n";
  std::vector<std::size_t> cursor(samples.per_method.size(), 0);
  for (std::size_t it = 0; it < samples.iterations_attempted; ++it) {
    for (std::size_t mi = 0; mi < samples.per_method.size(); ++mi) {
      const MethodSamples& ms = samples.per_method[mi];
      if (cursor[mi] >= ms.iterations.size() || ms.iterations[cursor[mi]] != it) continue;
      const std::size_t row = cursor[mi]++;
      for (std::size_t c = 0; c < samples.indicator_names.size(); ++c) {
        out += std::to_string(it);
        out += ',';
        out += method_name(ms.method);
        out += ',';
        out += samples.indicator_names[c];
        out += ',';
        out += format_double(ms.weights(row, c));
        out += '\n';
      }
    }
  }
  return out;
}

std::string summary_to_csv(const BoxplotSummary& summary) {
  std::string out = "method,indicator,count,min,q1,median,q3,max,mean\n";
  for (std::size_t mi = 0; mi < summary.methods.size(); ++mi) {
    for (std::size_t c = 0; c < summary.indicator_names.size(); ++c) {
      const BoxStats& b = summary.cells[mi][c];
      out += method_name(summary.methods[mi]);
      out += ',';
      out += summary.indicator_names[c];
      out += ',';
      out += std::to_string(b.count);
      for (double v : {b.min, b.q1, b.median, b.q3, b.max, b.mean}) {
        out += ',';
        out += format_double(v);
      }
      out += '\n';
    }
  }
  return out;
}

BoxplotSummary summary_from_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("summary CSV: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "method,indicator,count,min,q1,median,q3,max,mean") {
    throw ParseError("summary CSV: unexpected header '" + line + "'");
  }

  BoxplotSummary summary;
  std::size_t row_no = 1;
  while (std::getline(in, line)) {
    ++row_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cells = split(line, ',');
    if (cells.size() != 9) {
      throw ParseError("summary CSV row " + std::to_string(row_no) + ": expected 9 cells");
    }
    const auto method = parse_method(cells[0]);
    if (!method) {
      throw ParseError("summary CSV row " + std::to_string(row_no) + ": unknown method '" +
                       cells[0] + "'");
    }

    std::size_t mi = summary.methods.size();
    for (std::size_t i = 0; i < summary.methods.size(); ++i) {
      if (summary.methods[i] == *method) mi = i;
    }
    if (mi == summary.methods.size()) {
      summary.methods.push_back(*method);
      summary.cells.emplace_back();
    }

    std::size_t ci = summary.indicator_names.size();
    for (std::size_t i = 0; i < summary.indicator_names.size(); ++i) {
      if (summary.indicator_names[i] == cells[1]) ci = i;
    }
    if (ci == summary.indicator_names.size()) summary.indicator_names.push_back(cells[1]);

    BoxStats b;
    b.count = static_cast<std::size_t>(
        parse_double_strict(cells[2], "summary CSV row " + std::to_string(row_no)));
    const char* field_names[] = {"min", "q1", "median", "q3", "max", "mean"};
    double* fields[] = {&b.min, &b.q1, &b.median, &b.q3, &b.max, &b.mean};
    for (std::size_t f = 0; f < 6; ++f) {
      *fields[f] = parse_double_strict(
          cells[3 + f], "summary CSV row " + std::to_string(row_no) + " " + field_names[f]);
    }
    auto& row = summary.cells[mi];
    if (row.size() < ci + 1) row.resize(ci + 1);
    row[ci] = b;
  }
  if (summary.methods.empty()) throw ParseError("summary CSV: no data rows");
  for (const auto& row : summary.cells) {
    if (row.size() != summary.indicator_names.size()) {
      throw ParseError("summary CSV: methods cover different indicator sets");
    }
  }
  return summary;
}

}  // namespace indexforge
