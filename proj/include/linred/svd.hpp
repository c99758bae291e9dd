#pragma once

#include "linred/dense.hpp"
#include "linred/vec.hpp"

namespace linred {

// Thin SVD A = U * diag(sigma) * V^T with k = min(rows, cols) columns.
// Computed by one-sided Jacobi rotations, which keeps small singular values
// accurate; that is what the residual and condition-number oracles need.
struct SvdResult {
  DenseMatrix u;  // rows x k, columns orthonormal where sigma > 0
  Vec sigma;      // k values, descending, all >= 0
  DenseMatrix v;  // cols x k
};

SvdResult svd(const DenseMatrix& a);

// Numerical-rank cutoff: singular values <= max(m,n) * sigma_max * eps * 64
// count as zero.
double rank_cutoff(std::size_t rows, std::size_t cols, double sigma_max);

std::size_t numerical_rank(const SvdResult& s, std::size_t rows,
                           std::size_t cols);

// Eigenvalues (ascending) of a symmetric matrix, cyclic Jacobi. The input is
// symmetrized as (A + A^T)/2 first.
Vec symmetric_eigenvalues(const DenseMatrix& a);

}  // namespace linred
