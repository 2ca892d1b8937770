#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace indexforge {

// Dense row-major matrix of doubles. Small and value-semantic; everything in
// this project is at most a few hundred entries wide.
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

  // Takes entries in row-major order; throws UsageError on a size mismatch.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::vector<double> column(std::size_t c) const;

  const std::vector<double>& entries() const { return entries_; }

  bool all_finite() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

Matrix transpose(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);
std::vector<double> multiply(const Matrix& a, std::span<const double> v);

// max_ij |a_ij - b_ij|; matrices must have equal shape.
double max_abs_diff(const Matrix& a, const Matrix& b);

bool is_symmetric(const Matrix& m, double tol);

}  // namespace indexforge
