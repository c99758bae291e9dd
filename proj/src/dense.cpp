#include "linred/dense.hpp"

#include <cmath>
#include <stdexcept>

#include "linred/kernels.hpp"

namespace linred {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, Vec entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols)
    throw std::invalid_argument("DenseMatrix: entries length != rows*cols");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1.0;
  return I;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix T(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) T.at(j, i) = at(i, j);
  return T;
}

DenseMatrix DenseMatrix::with_column(const Vec& col) const {
  if (col.size() != rows_)
    throw std::invalid_argument("with_column: length mismatch");
  DenseMatrix B(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) B.at(i, j) = at(i, j);
    B.at(i, cols_) = col[i];
  }
  return B;
}

DenseMatrix DenseMatrix::with_row(const Vec& row) const {
  if (row.size() != cols_)
    throw std::invalid_argument("with_row: length mismatch");
  DenseMatrix B(rows_ + 1, cols_);
  B.a_ = a_;
  B.a_.insert(B.a_.end(), row.begin(), row.end());
  return B;
}

std::size_t DenseMatrix::nnz() const {
  std::size_t c = 0;
  for (double x : a_)
    if (x != 0.0) ++c;
  return c;
}

double DenseMatrix::max_abs() const {
  return kernels::max_abs(a_.data(), a_.size());
}

bool DenseMatrix::all_finite() const { return linred::all_finite(a_); }

Vec matvec(const DenseMatrix& A, const Vec& x) {
  if (A.cols() != x.size())
    throw std::invalid_argument("matvec: dimension mismatch");
  Vec y(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i)
    y[i] = kernels::dot(A.row_ptr(i), x.data(), A.cols());
  return y;
}

Vec matvec_transpose(const DenseMatrix& A, const Vec& x) {
  if (A.rows() != x.size())
    throw std::invalid_argument("matvec_transpose: dimension mismatch");
  Vec y(A.cols(), 0.0);
  for (std::size_t i = 0; i < A.rows(); ++i)
    kernels::axpy(x[i], A.row_ptr(i), y.data(), A.cols());
  return y;
}

DenseMatrix matmul(const DenseMatrix& A, const DenseMatrix& B) {
  if (A.cols() != B.rows())
    throw std::invalid_argument("matmul: dimension mismatch");
  // ikj order keeps the inner loop on contiguous rows of B.
  DenseMatrix C(A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t k = 0; k < A.cols(); ++k)
      kernels::axpy(A.at(i, k), B.row_ptr(k), C.row_ptr(i), B.cols());
  return C;
}

}  // namespace linred
