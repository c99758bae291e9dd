#pragma once

#include <cstdint>
#include <vector>

#include "linred/dense.hpp"
#include "linred/vec.hpp"

namespace linred {

// Compressed-sparse-row matrix. Column indices are strictly increasing within
// each row and stored values are nonzero; construction from triplets sums
// duplicates and compacts explicit zeros away.
class SparseMatrix {
 public:
  struct Triplet {
    std::size_t row, col;
    double value;
  };

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols,
               const std::vector<Triplet>& triplets);

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const DenseMatrix& A, double drop_below = 0.0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return values_.size(); }

  const std::vector<std::int64_t>& row_offsets() const { return row_offsets_; }
  const std::vector<std::int32_t>& col_indices() const { return col_indices_; }
  const Vec& values() const { return values_; }

  DenseMatrix densify() const;
  SparseMatrix transposed() const;

  // Appends a column on the right; `col` is given as (row index, value) pairs.
  SparseMatrix with_column(const std::vector<std::pair<std::size_t, double>>& col)
      const;
  // Appends a row at the bottom.
  SparseMatrix with_row(const std::vector<std::pair<std::size_t, double>>& row)
      const;

  double max_abs() const;
  bool all_finite() const;

  // Internal consistency check of the CSR invariants; used by tests and after
  // file input.
  bool check_invariants() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> row_offsets_;  // length rows+1
  std::vector<std::int32_t> col_indices_;
  Vec values_;
};

// Touches only stored entries.
Vec matvec(const SparseMatrix& A, const Vec& x);
// y = A^T x, one scatter pass over the stored entries.
Vec matvec_transpose(const SparseMatrix& A, const Vec& x);

}  // namespace linred
