#include "linred/rational.hpp"

#include <stdexcept>

namespace linred {

RationalMatrix RationalMatrix::from_dense(const DenseMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r.set(i, j, Rational(m.at(i, j)));
  return r;
}

RationalMatrix RationalMatrix::from_sparse(const SparseMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  const auto& off = m.row_offsets();
  const auto& col = m.col_indices();
  const auto& val = m.values();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::int64_t k = off[i]; k < off[i + 1]; ++k)
      r.set(i, std::size_t(col[k]), Rational(val[k]));
  return r;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i, Rational(1));
  return r;
}

RationalMatrix RationalMatrix::with_column(const RationalVec& col) const {
  if (col.size() != rows_)
    throw std::invalid_argument("with_column: length mismatch");
  RationalMatrix r(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    r.set(i, cols_, col[i]);
  }
  return r;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

std::size_t RationalMatrix::nnz() const {
  std::size_t c = 0;
  for (const Rational& x : a_)
    if (x != 0) ++c;
  return c;
}

DenseMatrix RationalMatrix::to_dense() const {
  DenseMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).get_d();
  return m;
}

RationalVec rational_vec_from(const Vec& v) {
  RationalVec r;
  r.reserve(v.size());
  for (double x : v) r.emplace_back(x);
  return r;
}

Vec vec_from_rational(const RationalVec& v) {
  Vec r;
  r.reserve(v.size());
  for (const Rational& x : v) r.push_back(x.get_d());
  return r;
}

}  // namespace linred
