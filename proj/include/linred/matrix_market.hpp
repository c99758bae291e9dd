#pragma once

#include <iosfwd>
#include <string>

#include "linred/dense.hpp"
#include "linred/sparse.hpp"
#include "linred/vec.hpp"

// Matrix Market readers/writers. Sparse matrices use the coordinate format,
// dense matrices and vectors the array format (column-major, per the spec).
// Fields are whitespace-delimited; "real" and "integer" fields are accepted on
// input, "real" is written.

namespace linred::mm {

void write_sparse(std::ostream& os, const SparseMatrix& A);
void write_dense(std::ostream& os, const DenseMatrix& A);
void write_vector(std::ostream& os, const Vec& v);

SparseMatrix read_sparse(std::istream& is);
DenseMatrix read_dense(std::istream& is);
Vec read_vector(std::istream& is);

// File-path conveniences; throw std::runtime_error on I/O or parse failure.
void save_sparse(const std::string& path, const SparseMatrix& A);
void save_dense(const std::string& path, const DenseMatrix& A);
void save_vector(const std::string& path, const Vec& v);
SparseMatrix load_sparse(const std::string& path);
DenseMatrix load_dense(const std::string& path);
Vec load_vector(const std::string& path);

// Peeks at the banner to tell coordinate from array files.
bool file_is_coordinate(const std::string& path);

}  // namespace linred::mm
