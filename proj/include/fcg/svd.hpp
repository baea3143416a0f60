#pragma once

#include <vector>

#include "fcg/dense.hpp"

namespace fcg {

// Thin SVD, A = U diag(sigma) V^T with k = min(m, n) columns. Columns of U
// belonging to zero singular values are left as zero vectors.
struct SVDResult {
  std::vector<double> singular_values;  // non-increasing
  Matrix U;                             // m×k
  Matrix V;                             // n×k
  double rank_threshold;                // max(m,n) · eps · sigma_max
  std::size_t rank;
};

// One-sided Jacobi with explicit accumulation.
SVDResult svd(const Matrix& A);

// Minimum-norm least-squares solution V Sigma^+ U^T b, dropping singular
// values at or below the rank threshold.
Vector pinv_solve(const LinearSystem& sys);

}  // namespace fcg
