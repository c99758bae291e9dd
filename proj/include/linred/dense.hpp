#pragma once

#include <cstddef>
#include <vector>

#include "linred/vec.hpp"

namespace linred {

// Row-major dense matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}
  DenseMatrix(std::size_t rows, std::size_t cols, Vec entries);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  double* row_ptr(std::size_t i) { return a_.data() + i * cols_; }
  const double* row_ptr(std::size_t i) const { return a_.data() + i * cols_; }

  const Vec& entries() const { return a_; }
  Vec& entries() { return a_; }

  DenseMatrix transposed() const;

  // Appends a column on the right.
  DenseMatrix with_column(const Vec& col) const;
  // Appends a row at the bottom.
  DenseMatrix with_row(const Vec& row) const;

  std::size_t nnz() const;  // count of entries != 0
  double max_abs() const;
  bool all_finite() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Vec a_;
};

Vec matvec(const DenseMatrix& A, const Vec& x);
// y = A^T x
Vec matvec_transpose(const DenseMatrix& A, const Vec& x);

DenseMatrix matmul(const DenseMatrix& A, const DenseMatrix& B);

}  // namespace linred
