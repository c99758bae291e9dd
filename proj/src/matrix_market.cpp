#include "linred/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace linred::mm {

namespace {

struct Banner {
  std::string format;  // coordinate | array
  std::string field;   // real | integer
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

Banner read_banner(std::istream& is) {
  std::string line;
  if (!std::getline(is, line))
    throw std::runtime_error("matrix market: empty input");
  std::istringstream ls(line);
  std::string tag, object, format, field, symmetry;
  ls >> tag >> object >> format >> field >> symmetry;
  if (tag != "%%MatrixMarket" || lower(object) != "matrix")
    throw std::runtime_error("matrix market: bad banner: " + line);
  format = lower(format);
  field = lower(field);
  symmetry = lower(symmetry);
  if (format != "coordinate" && format != "array")
    throw std::runtime_error("matrix market: unsupported format: " + format);
  if (field != "real" && field != "integer")
    throw std::runtime_error("matrix market: unsupported field: " + field);
  if (symmetry != "general")
    throw std::runtime_error("matrix market: only general symmetry supported");
  return {format, field};
}

// Skips % comment lines and blank lines, returns the size line.
std::string read_size_line(std::istream& is) {
  std::string line;
  while (std::getline(is, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '%') continue;
    return line;
  }
  throw std::runtime_error("matrix market: missing size line");
}

}  // namespace

void write_sparse(std::ostream& os, const SparseMatrix& A) {
  os << "%%MatrixMarket matrix coordinate real general\n";
  os << A.rows() << " " << A.cols() << " " << A.nnz() << "\n";
  os << std::setprecision(17);
  const auto& off = A.row_offsets();
  const auto& col = A.col_indices();
  const auto& val = A.values();
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::int64_t k = off[i]; k < off[i + 1]; ++k)
      os << i + 1 << " " << col[k] + 1 << " " << val[k] << "\n";
}

void write_dense(std::ostream& os, const DenseMatrix& A) {
  os << "%%MatrixMarket matrix array real general\n";
  os << A.rows() << " " << A.cols() << "\n";
  os << std::setprecision(17);
  for (std::size_t j = 0; j < A.cols(); ++j)
    for (std::size_t i = 0; i < A.rows(); ++i) os << A.at(i, j) << "\n";
}

void write_vector(std::ostream& os, const Vec& v) {
  os << "%%MatrixMarket matrix array real general\n";
  os << v.size() << " 1\n";
  os << std::setprecision(17);
  for (double x : v) os << x << "\n";
}

SparseMatrix read_sparse(std::istream& is) {
  Banner b = read_banner(is);
  if (b.format != "coordinate")
    throw std::runtime_error("matrix market: expected coordinate format");
  std::istringstream size(read_size_line(is));
  std::size_t rows, cols, nnz;
  if (!(size >> rows >> cols >> nnz))
    throw std::runtime_error("matrix market: bad size line");
  std::vector<SparseMatrix::Triplet> t;
  t.reserve(nnz);
  for (std::size_t k = 0; k < nnz; ++k) {
    std::size_t i, j;
    double v;
    if (!(is >> i >> j >> v))
      throw std::runtime_error("matrix market: truncated entries");
    if (i < 1 || i > rows || j < 1 || j > cols)
      throw std::runtime_error("matrix market: index out of range");
    t.push_back({i - 1, j - 1, v});
  }
  return SparseMatrix(rows, cols, t);
}

DenseMatrix read_dense(std::istream& is) {
  Banner b = read_banner(is);
  if (b.format != "array")
    throw std::runtime_error("matrix market: expected array format");
  std::istringstream size(read_size_line(is));
  std::size_t rows, cols;
  if (!(size >> rows >> cols))
    throw std::runtime_error("matrix market: bad size line");
  DenseMatrix A(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i)
      if (!(is >> A.at(i, j)))
        throw std::runtime_error("matrix market: truncated entries");
  return A;
}

Vec read_vector(std::istream& is) {
  DenseMatrix A = read_dense(is);
  if (A.cols() != 1 && A.rows() != 1)
    throw std::runtime_error("matrix market: vector file must be n x 1");
  Vec v;
  v.reserve(A.rows() * A.cols());
  for (double x : A.entries()) v.push_back(x);
  return v;
}

namespace {

template <typename Fn>
auto with_input(const std::string& path, Fn&& fn) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  return fn(is);
}

template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  fn(os);
  if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace

void save_sparse(const std::string& path, const SparseMatrix& A) {
  with_output(path, [&](std::ostream& os) { write_sparse(os, A); });
}
void save_dense(const std::string& path, const DenseMatrix& A) {
  with_output(path, [&](std::ostream& os) { write_dense(os, A); });
}
void save_vector(const std::string& path, const Vec& v) {
  with_output(path, [&](std::ostream& os) { write_vector(os, v); });
}
SparseMatrix load_sparse(const std::string& path) {
  return with_input(path, [](std::istream& is) { return read_sparse(is); });
}
DenseMatrix load_dense(const std::string& path) {
  return with_input(path, [](std::istream& is) { return read_dense(is); });
}
Vec load_vector(const std::string& path) {
  return with_input(path, [](std::istream& is) { return read_vector(is); });
}

bool file_is_coordinate(const std::string& path) {
  return with_input(path, [](std::istream& is) {
    return read_banner(is).format == "coordinate";
  });
}

}  // namespace linred::mm
