#pragma once

#include <cmath>
#include <cstddef>

#include "linred/dense.hpp"
#include "linred/rng.hpp"
#include "linred/sparse.hpp"
#include "linred/vec.hpp"

namespace linred::testing {

inline bool rel_close(double a, double b, double rel, double abs_floor = 0.0) {
  const double diff = std::fabs(a - b);
  return diff <= rel * std::max(std::fabs(a), std::fabs(b)) + abs_floor;
}

inline DenseMatrix random_dense(std::size_t m, std::size_t n, RngStream& rng) {
  DenseMatrix a(m, n);
  for (double& x : a.entries()) x = rng.normal();
  return a;
}

inline Vec random_vec(std::size_t n, RngStream& rng) {
  Vec v(n);
  for (double& x : v) x = rng.normal();
  return v;
}

inline Vec random_mean_zero(std::size_t n, RngStream& rng) {
  Vec v = random_vec(n, rng);
  const OnesSplit s = split_along_ones(v);
  return s.mean_zero;
}

// ||Ax - b||_2 evaluated directly.
inline double residual_of(const DenseMatrix& a, const Vec& x, const Vec& b) {
  Vec r = matvec(a, x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return lp_norm(r);
}

inline double residual_of(const SparseMatrix& a, const Vec& x, const Vec& b) {
  Vec r = matvec(a, x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return lp_norm(r);
}

// Modified Gram-Schmidt orthonormal basis of the column space; independent of
// the SVD/QR code paths it is used to check.
inline std::vector<Vec> column_space_basis(const DenseMatrix& a,
                                           double drop_tol = 1e-10) {
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Vec v(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) v[i] = a.at(i, j);
    const double orig = lp_norm(v);
    for (const Vec& q : basis) {
      const double c = dot(q, v);
      axpy(-c, q, v);
    }
    // A second pass keeps the basis orthonormal to working precision.
    for (const Vec& q : basis) {
      const double c = dot(q, v);
      axpy(-c, q, v);
    }
    const double norm = lp_norm(v);
    if (norm > drop_tol * std::max(1.0, orig)) {
      for (double& x : v) x /= norm;
      basis.push_back(std::move(v));
    }
  }
  return basis;
}

}  // namespace linred::testing
