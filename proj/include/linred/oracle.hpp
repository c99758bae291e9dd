#pragma once

#include <string>
#include <vector>

#include "linred/dense.hpp"
#include "linred/rational.hpp"
#include "linred/rng.hpp"
#include "linred/vec.hpp"

// Slow, trusted ground truth: exact rank and satisfiability in rational
// arithmetic, minimum residual via SVD projection. Every reduction contract
// in this library is certified against these on desk-scale instances.

namespace linred::oracle {

// Hard size ceilings; larger inputs are a caller bug, not a slow path.
inline constexpr std::size_t kRationalDimLimit = 128;
inline constexpr std::size_t kSvdDimLimit = 512;

struct OracleVerdict {
  std::string quantity;  // "rank" | "min_residual" | "satisfiable"
  double value;
  std::string method;
};

// Exact rank by fraction-free (Bareiss) elimination. Rows are scaled to
// integers first; both operations preserve rank exactly.
std::size_t exact_rank(const RationalMatrix& m);

// min_x ||Ax - b||_2 = ||b - P_colspace(A) b||_2 via full SVD.
double min_residual(const DenseMatrix& a, const Vec& b);

// Ax = b solvable over the rationals, decided by the rank criterion
// rank(A) == rank([A b]).
bool exact_satisfiable(const RationalMatrix& a, const RationalVec& b);

// Random combination of basis vectors; in the span and nonzero on the whole
// support of the basis with probability one. Test fixture for the column
// augmentation analysis.
Vec nonzero_support_vector(const std::vector<Vec>& basis, RngStream& rng);

}  // namespace linred::oracle
