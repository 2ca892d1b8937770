#pragma once

#include <span>
#include <string>
#include <vector>

#include "indexforge/matrix.hpp"

namespace indexforge {

struct ColumnStats {
  double mean = 0.0;
  double variance = 0.0;  // sample variance, denominator rows-1 (0 for a single row)
  double stddev = 0.0;
};

ColumnStats column_stats(const Matrix& m, std::size_t col);

std::vector<double> column_means(const Matrix& m);

// Sample covariance matrix of the columns (denominator rows-1). Requires rows >= 2.
Matrix covariance_matrix(const Matrix& m);

// Pearson correlation of the columns. Symmetric by construction (each pair is
// computed once) with unit diagonal for non-constant columns. Any pair that
// involves a zero-variance column gets r = 0, diagonal included; such columns
// are reported through `warnings` when given.
Matrix pearson_correlation_matrix(const Matrix& m, std::vector<std::string>* warnings = nullptr);

// Quantiles by linear interpolation between order statistics, with the
// position convention p*(n-1). Each prob must lie in [0, 1].
std::vector<double> quantiles(std::span<const double> sample, std::span<const double> probs);

double mean_of(std::span<const double> sample);

}  // namespace indexforge
