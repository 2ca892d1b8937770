#pragma once

#include <vector>

#include "indexforge/matrix.hpp"

namespace indexforge {

struct EigenResult {
  std::vector<double> eigenvalues;  // sorted non-increasing
  Matrix eigenvectors;              // unit-norm columns aligned with eigenvalues
};

// Lower-triangular L with L*L^T = m. Requires m symmetric within 1e-12.
// Throws NumericError when a pivot falls at or below 1e-12 (not positive definite).
Matrix cholesky(const Matrix& m);

// Cyclic Jacobi rotations; converged when every off-diagonal magnitude is
// below 1e-12, hard limit 100 sweeps (NumericError carrying the residual
// beyond that). Eigenvalues come back sorted non-increasing and each
// eigenvector's largest-magnitude entry is made non-negative so results are
// deterministic up to the input bits.
EigenResult symmetric_eigendecomposition(const Matrix& m);

}  // namespace indexforge
