#pragma once

#include <cstddef>

#include "linred/dense.hpp"
#include "linred/sparse.hpp"
#include "linred/vec.hpp"

namespace linred {

struct SolveResult {
  Vec x;
  double residual_l2 = 0.0;  // ||Ax - b||_2, recomputed from the returned x
  bool converged = false;
  std::size_t iterations = 0;
};

// Dense square solve by LU with partial pivoting plus a couple of residual
// polish steps. A matrix that is singular to working tolerance comes back
// with converged = false rather than as an error.
SolveResult solve_lu(const DenseMatrix& a, const Vec& b);

// Least squares min_x ||Ax - b||_2. Householder QR for full column rank;
// falls back to an SVD minimum-norm solution when rank deficiency is
// detected (including m < n).
SolveResult solve_least_squares(const DenseMatrix& a, const Vec& b);

// Conjugate gradient on the normal equations (CGLS recurrence), so general
// square sparse systems are accepted; converged means ||Ax-b|| <= tol*||b||.
SolveResult solve_cg(const SparseMatrix& a, const Vec& b,
                     std::size_t max_iters, double tol);

// sigma_max / sigma_min by full SVD; +inf when the matrix is column-rank
// deficient to tolerance. Intended for desk-scale matrices only.
double estimate_condition_number(const DenseMatrix& a);

// True if the square matrix factors with every pivot above the numerical
// cutoff. This is the float-backend full-rank test used by the reductions.
bool lu_full_rank(const DenseMatrix& a);

}  // namespace linred
