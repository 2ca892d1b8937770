#pragma once

#include <stdexcept>
#include <string>

namespace indexforge {

// Error taxonomy. The CLI maps these onto process exit codes:
//   UsageError and subclasses -> 1, DegenerateDataError -> 2, NumericError -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller misuse: bad arguments, inconsistent dimensions, violated preconditions.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Malformed input data (CSV etc.); message names the offending row/column.
class ParseError : public UsageError {
 public:
  using UsageError::UsageError;
};

// A tunable was set to a value the data cannot support (e.g. DEA epsilon too large).
class ConfigError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Structurally valid data on which a method is undefined (zero variance, all
// columns maximally uniform, ...).
class DegenerateDataError : public Error {
 public:
  using Error::Error;
};

// Numeric algorithm failure: non-convergence, failed decomposition, pivot limit.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Every Monte Carlo iteration failed for some method.
class AggregateError : public DegenerateDataError {
 public:
  using DegenerateDataError::DegenerateDataError;
};

}  // namespace indexforge
