#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "linred/dense.hpp"
#include "linred/sparse.hpp"

namespace linred {

using Rational = mpq_class;
using RationalVec = std::vector<Rational>;

// Exact arbitrary-precision rational matrix; the trusted backend for rank
// and satisfiability ground truth. Entries are kept canonical (gcd-reduced,
// positive denominator), which mpq_class maintains for us as long as every
// write goes through set().
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  // Exact conversion; every double is a dyadic rational.
  static RationalMatrix from_dense(const DenseMatrix& m);
  static RationalMatrix from_sparse(const SparseMatrix& m);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, Rational v) {
    v.canonicalize();
    a_[i * cols_ + j] = std::move(v);
  }

  RationalMatrix with_column(const RationalVec& col) const;
  RationalMatrix transposed() const;

  std::size_t nnz() const;

  // Approximate mirror for the float pipeline.
  DenseMatrix to_dense() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

RationalVec rational_vec_from(const Vec& v);
Vec vec_from_rational(const RationalVec& v);

}  // namespace linred
