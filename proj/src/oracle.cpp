#include "linred/oracle.hpp"

#include <stdexcept>
#include <utility>

#include "linred/svd.hpp"

namespace linred::oracle {

namespace {

// Clears denominators row by row; row scaling by a positive integer does not
// change the rank.
std::vector<std::vector<mpz_class>> to_integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<mpz_class>> rows(m.rows(),
                                           std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l(1);
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m.at(i, j);
      mpz_class scaled = q.get_num() * (l / q.get_den());
      rows[i][j] = std::move(scaled);
    }
  }
  return rows;
}

}  // namespace

std::size_t exact_rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows > kRationalDimLimit || cols > kRationalDimLimit)
    throw std::invalid_argument("exact_rank: beyond the rational oracle ceiling");
  if (rows == 0 || cols == 0) return 0;
  auto a = to_integer_rows(m);

  // Fraction-free Gaussian elimination (Bareiss). Entries stay minors of the
  // input, so the division by the previous pivot is exact; pivot columns may
  // be skipped when a column is already zeroed out, the identity still holds.
  mpz_class prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_class quot, rem;
        mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                    prev.get_mpz_t());
        if (rem != 0)
          throw std::logic_error("exact_rank: Bareiss division not exact");
        a[i][j] = std::move(quot);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

double min_residual(const DenseMatrix& a, const Vec& b) {
  if (a.rows() != b.size())
    throw std::invalid_argument("min_residual: dimension mismatch");
  if (a.rows() > kSvdDimLimit || a.cols() > kSvdDimLimit)
    throw std::invalid_argument("min_residual: beyond the SVD oracle ceiling");
  SvdResult s = svd(a);
  const double cutoff = rank_cutoff(a.rows(), a.cols(), s.sigma.front());
  Vec r = b;
  for (std::size_t j = 0; j < s.sigma.size(); ++j) {
    if (s.sigma[j] <= cutoff) break;
    double uj_b = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) uj_b += s.u.at(i, j) * b[i];
    for (std::size_t i = 0; i < a.rows(); ++i) r[i] -= uj_b * s.u.at(i, j);
  }
  return lp_norm(r);
}

bool exact_satisfiable(const RationalMatrix& a, const RationalVec& b) {
  if (a.rows() != b.size())
    throw std::invalid_argument("exact_satisfiable: dimension mismatch");
  return exact_rank(a) == exact_rank(a.with_column(b));
}

Vec nonzero_support_vector(const std::vector<Vec>& basis, RngStream& rng) {
  if (basis.empty())
    throw std::invalid_argument("nonzero_support_vector: empty basis");
  const std::size_t n = basis.front().size();
  Vec v(n, 0.0);
  for (const Vec& bvec : basis) {
    if (bvec.size() != n)
      throw std::invalid_argument("nonzero_support_vector: ragged basis");
    axpy(rng.normal(), bvec, v);
  }
  return v;
}

}  // namespace linred::oracle
