#include "linred/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "linred/kernels.hpp"

namespace linred {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols,
                           const std::vector<Triplet>& triplets)
    : rows_(rows), cols_(cols) {
  if (cols > std::size_t(std::numeric_limits<std::int32_t>::max()))
    throw std::invalid_argument("SparseMatrix: too many columns");
  std::vector<Triplet> t = triplets;
  for (const Triplet& e : t)
    if (e.row >= rows || e.col >= cols)
      throw std::invalid_argument("SparseMatrix: triplet out of range");
  std::sort(t.begin(), t.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  row_offsets_.assign(rows + 1, 0);
  col_indices_.reserve(t.size());
  values_.reserve(t.size());
  std::size_t i = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    row_offsets_[r] = std::int64_t(values_.size());
    while (i < t.size() && t[i].row == r) {
      std::size_t c = t[i].col;
      double v = 0.0;
      while (i < t.size() && t[i].row == r && t[i].col == c) v += t[i++].value;
      if (v != 0.0) {
        col_indices_.push_back(std::int32_t(c));
        values_.push_back(v);
      }
    }
  }
  row_offsets_[rows] = std::int64_t(values_.size());
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  std::vector<Triplet> t;
  t.reserve(n);
  for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, 1.0});
  return SparseMatrix(n, n, t);
}

SparseMatrix SparseMatrix::from_dense(const DenseMatrix& A, double drop_below) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (std::fabs(A.at(i, j)) > drop_below) t.push_back({i, j, A.at(i, j)});
  return SparseMatrix(A.rows(), A.cols(), t);
}

DenseMatrix SparseMatrix::densify() const {
  DenseMatrix A(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::int64_t k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k)
      A.at(i, std::size_t(col_indices_[k])) = values_[k];
  return A;
}

SparseMatrix SparseMatrix::transposed() const {
  std::vector<Triplet> t;
  t.reserve(nnz());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::int64_t k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k)
      t.push_back({std::size_t(col_indices_[k]), i, values_[k]});
  return SparseMatrix(cols_, rows_, t);
}

SparseMatrix SparseMatrix::with_column(
    const std::vector<std::pair<std::size_t, double>>& col) const {
  std::vector<Triplet> t;
  t.reserve(nnz() + col.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::int64_t k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k)
      t.push_back({i, std::size_t(col_indices_[k]), values_[k]});
  for (const auto& [r, v] : col) {
    if (r >= rows_) throw std::invalid_argument("with_column: row out of range");
    t.push_back({r, cols_, v});
  }
  return SparseMatrix(rows_, cols_ + 1, t);
}

SparseMatrix SparseMatrix::with_row(
    const std::vector<std::pair<std::size_t, double>>& row) const {
  std::vector<Triplet> t;
  t.reserve(nnz() + row.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::int64_t k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k)
      t.push_back({i, std::size_t(col_indices_[k]), values_[k]});
  for (const auto& [c, v] : row) {
    if (c >= cols_) throw std::invalid_argument("with_row: col out of range");
    t.push_back({rows_, c, v});
  }
  return SparseMatrix(rows_ + 1, cols_, t);
}

double SparseMatrix::max_abs() const {
  return kernels::max_abs(values_.data(), values_.size());
}

bool SparseMatrix::all_finite() const { return linred::all_finite(values_); }

bool SparseMatrix::check_invariants() const {
  if (row_offsets_.size() != rows_ + 1) return false;
  if (row_offsets_.front() != 0) return false;
  if (row_offsets_.back() != std::int64_t(values_.size())) return false;
  if (col_indices_.size() != values_.size()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (row_offsets_[i] > row_offsets_[i + 1]) return false;
    for (std::int64_t k = row_offsets_[i]; k < row_offsets_[i + 1]; ++k) {
      if (col_indices_[k] < 0 || std::size_t(col_indices_[k]) >= cols_)
        return false;
      if (k > row_offsets_[i] && col_indices_[k] <= col_indices_[k - 1])
        return false;
      if (values_[k] == 0.0) return false;
    }
  }
  return true;
}

Vec matvec(const SparseMatrix& A, const Vec& x) {
  if (A.cols() != x.size())
    throw std::invalid_argument("matvec: dimension mismatch");
  const auto& off = A.row_offsets();
  const auto& col = A.col_indices();
  const auto& val = A.values();
  Vec y(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    std::int64_t b = off[i], e = off[i + 1];
    y[i] = kernels::dot_gather(val.data() + b, col.data() + b, x.data(),
                               std::size_t(e - b));
  }
  return y;
}

Vec matvec_transpose(const SparseMatrix& A, const Vec& x) {
  if (A.rows() != x.size())
    throw std::invalid_argument("matvec_transpose: dimension mismatch");
  const auto& off = A.row_offsets();
  const auto& col = A.col_indices();
  const auto& val = A.values();
  Vec y(A.cols(), 0.0);
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::int64_t k = off[i]; k < off[i + 1]; ++k)
      y[std::size_t(col[k])] += val[k] * x[i];
  return y;
}

}  // namespace linred
