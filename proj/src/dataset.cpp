#include "indexforge/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_set>

#include "indexforge/errors.hpp"
#include "indexforge/stats.hpp"

namespace indexforge {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

double parse_cell(const std::string& cell, std::size_t row, const std::string& column) {
  double value = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || cell.empty()) {
    throw ParseError("row " + std::to_string(row) + ", column '" + column +
                     "': cannot parse '" + cell + "' as a number");
  }
  if (!std::isfinite(value)) {
    throw ParseError("row " + std::to_string(row) + ", column '" + column +
                     "': non-finite value");
  }
  return value;
}

}  // namespace

IndicatorMatrix make_indicator_matrix(std::vector<std::string> system_ids,
                                      std::vector<std::string> indicator_names,
                                      Matrix values, bool scaled) {
  if (values.rows() < 1 || values.cols() < 1) {
    throw UsageError("indicator matrix needs at least one system and one indicator");
  }
  if (system_ids.size() != values.rows() || indicator_names.size() != values.cols()) {
    throw UsageError("indicator matrix labels do not match its dimensions");
  }
  if (!values.all_finite()) throw UsageError("indicator matrix has non-finite entries");
  if (scaled) {
    for (double v : values.entries()) {
      if (v < 0.0 || v > 1.0) {
        throw UsageError("scaled indicator matrix has an entry outside [0, 1]");
      }
    }
  }
  return {std::move(system_ids), std::move(indicator_names), std::move(values), scaled};
}

IndicatorMatrix load_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty CSV input");
  const std::vector<std::string> header = split_line(line);
  if (header.size() < 2) {
    throw ParseError("header must contain an id column and at least one indicator");
  }
  const std::vector<std::string> names(header.begin() + 1, header.end());

  std::vector<std::string> ids;
  std::vector<double> entries;
  std::unordered_set<std::string> seen;
  std::size_t row = 1;  // header is row 1
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const std::vector<std::string> cells = split_line(line);
    if (cells.size() != header.size()) {
      throw ParseError("row " + std::to_string(row) + ": expected " +
                       std::to_string(header.size()) + " cells, found " +
                       std::to_string(cells.size()) + " (ragged row)");
    }
    if (!seen.insert(cells[0]).second) {
      throw ParseError("row " + std::to_string(row) + ": duplicate system id '" + cells[0] + "'");
    }
    ids.push_back(cells[0]);
    for (std::size_t c = 1; c < cells.size(); ++c) {
      entries.push_back(parse_cell(cells[c], row, names[c - 1]));
    }
  }
  if (ids.empty()) throw ParseError("CSV contains a header but no data rows");

  Matrix values(ids.size(), names.size(), std::move(entries));
  return make_indicator_matrix(std::move(ids), names, std::move(values), false);
}

IndicatorMatrix load_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return load_csv(in);
}

IndicatorMatrix min_max_scale(const IndicatorMatrix& m, std::vector<std::string>* warnings) {
  if (m.scaled) throw UsageError("min_max_scale: input is already scaled");

  Matrix scaled(m.systems(), m.indicators());
  for (std::size_t c = 0; c < m.indicators(); ++c) {
    double lo = m.values(0, c);
    double hi = lo;
    for (std::size_t r = 1; r < m.systems(); ++r) {
      lo = std::min(lo, m.values(r, c));
      hi = std::max(hi, m.values(r, c));
    }
    if (lo == hi) {
      // constant column: all zeros
      if (warnings) {
        warnings->push_back("indicator '" + m.indicator_names[c] +
                            "' is constant; scaled to all zeros");
      }
      continue;
    }
    const double range = hi - lo;
    for (std::size_t r = 0; r < m.systems(); ++r) {
      scaled(r, c) = (m.values(r, c) - lo) / range;
    }
  }
  return make_indicator_matrix(m.system_ids, m.indicator_names, std::move(scaled), true);
}

void negate_columns(IndicatorMatrix& m, const std::vector<std::string>& names) {
  for (const std::string& name : names) {
    const auto it =
        std::find(m.indicator_names.begin(), m.indicator_names.end(), name);
    if (it == m.indicator_names.end()) {
      throw UsageError("negate: no indicator named '" + name + "'");
    }
    const std::size_t c = static_cast<std::size_t>(it - m.indicator_names.begin());
    for (std::size_t r = 0; r < m.systems(); ++r) m.values(r, c) = -m.values(r, c);
  }
}

std::vector<std::string> ValidationReport::messages() const {
  std::vector<std::string> out;
  for (const auto& name : constant_columns) {
    out.push_back("indicator '" + name + "' is constant");
  }
  for (const auto& [a, b] : duplicate_columns) {
    out.push_back("indicators '" + a + "' and '" + b + "' are duplicates (|r| = 1)");
  }
  if (fewer_systems_than_indicators) {
    out.push_back("fewer systems than indicators");
  }
  return out;
}

ValidationReport validate(const IndicatorMatrix& m) {
  ValidationReport report;
  std::vector<bool> constant(m.indicators(), false);
  for (std::size_t c = 0; c < m.indicators(); ++c) {
    double lo = m.values(0, c);
    double hi = lo;
    for (std::size_t r = 1; r < m.systems(); ++r) {
      lo = std::min(lo, m.values(r, c));
      hi = std::max(hi, m.values(r, c));
    }
    if (lo == hi) {
      constant[c] = true;
      report.constant_columns.push_back(m.indicator_names[c]);
    }
  }
  if (m.systems() >= 2) {
    const Matrix corr = pearson_correlation_matrix(m.values);
    for (std::size_t i = 0; i < m.indicators(); ++i) {
      for (std::size_t j = i + 1; j < m.indicators(); ++j) {
        if (!constant[i] && !constant[j] && std::fabs(corr(i, j)) >= 1.0 - 1e-9) {
          report.duplicate_columns.emplace_back(m.indicator_names[i], m.indicator_names[j]);
        }
      }
    }
  }
  report.fewer_systems_than_indicators = m.systems() < m.indicators();
  return report;
}

}  // namespace indexforge
