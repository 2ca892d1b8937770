#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "indexforge/matrix.hpp"

namespace indexforge {

// m systems x n indicators. `scaled` distinguishes raw data from min-max
// normalized data; every weighting method refuses unscaled input.
struct IndicatorMatrix {
  std::vector<std::string> system_ids;
  std::vector<std::string> indicator_names;
  Matrix values;
  bool scaled = false;

  std::size_t systems() const { return values.rows(); }
  std::size_t indicators() const { return values.cols(); }
};

// Checks the type invariants (labels match dimensions, entries finite,
// scaled entries within [0,1]) and throws UsageError on violation.
IndicatorMatrix make_indicator_matrix(std::vector<std::string> system_ids,
                                      std::vector<std::string> indicator_names,
                                      Matrix values, bool scaled = false);

// CSV layout: first header cell names the id column, remaining header cells
// are indicator names; one row per system; comma separator, decimal points,
// no quoting. Errors name the offending row and column.
IndicatorMatrix load_csv(std::istream& in);
IndicatorMatrix load_csv_file(const std::string& path);

// (x - min) / (max - min) per column. Constant columns map to all zeros and
// are reported through `warnings`. Throws UsageError on already-scaled input.
IndicatorMatrix min_max_scale(const IndicatorMatrix& m,
                              std::vector<std::string>* warnings = nullptr);

// Negates the named columns in place (cost-type indicators, applied before
// scaling). Unknown names raise UsageError.
void negate_columns(IndicatorMatrix& m, const std::vector<std::string>& names);

struct ValidationReport {
  std::vector<std::string> constant_columns;
  std::vector<std::pair<std::string, std::string>> duplicate_columns;  // |r| == 1 pairs
  bool fewer_systems_than_indicators = false;

  bool empty() const {
    return constant_columns.empty() && duplicate_columns.empty() &&
           !fewer_systems_than_indicators;
  }
  std::vector<std::string> messages() const;
};

ValidationReport validate(const IndicatorMatrix& m);

}  // namespace indexforge
