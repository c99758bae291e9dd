#include "linred/wordram.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace linred {

namespace {

std::uint64_t pow5(std::size_t base) {
  if (base > 6000)
    throw std::invalid_argument("wordram: dimension too large for N = d^5");
  std::uint64_t n = 1;
  for (int i = 0; i < 5; ++i) n *= base;
  return n;
}

}  // namespace

RationalMatrix augment_random_column_int(const RationalMatrix& m, std::size_t r,
                                         RngStream& rng, ProvenanceStep* prov) {
  const std::size_t rows = m.rows();
  if (r > rows)
    throw std::invalid_argument("augment_random_column_int: r exceeds row count");
  const std::uint64_t big_n = pow5(std::max(rows, m.cols()));
  const std::size_t s = augment_sparsity_budget(rows, r);

  std::set<std::size_t> support;
  if (s >= rows) {
    for (std::size_t i = 0; i < rows; ++i) support.insert(i);
  } else {
    for (std::size_t draw = 0; draw < s; ++draw)
      support.insert(std::size_t(rng.uniform_below(rows)));
  }

  RationalVec col(rows, Rational(0));
  for (std::size_t i : support) {
    const std::uint64_t v = rng.uniform_below(big_n) + 1;  // uniform on [1, N]
    col[i] = Rational(mpz_class(static_cast<unsigned long>(v)));
  }
  RationalMatrix out = m.with_column(col);
  if (prov) {
    prov->step = "augment_random_column_int";
    prov->seed = rng.seed();
    prov->stream = rng.stream();
    prov->rows_before = m.rows();
    prov->cols_before = m.cols();
    prov->nnz_before = m.nnz();
    prov->rows_after = out.rows();
    prov->cols_after = out.cols();
    prov->nnz_after = out.nnz();
    prov->params = {{"r", double(r)},
                    {"budget", double(s)},
                    {"entry_bound", double(big_n)}};
  }
  return out;
}

RationalVec sample_rounded_gaussian(std::size_t n, RngStream& rng) {
  if (n == 0)
    throw std::invalid_argument("sample_rounded_gaussian: n must be >= 1");
  const std::uint64_t big_n = pow5(n);
  const double sd = 1.0 / std::sqrt(double(n));
  RationalVec b(n);
  const mpz_class denom(static_cast<unsigned long>(big_n));
  for (std::size_t i = 0; i < n; ++i) {
    const double raw = rng.normal(0.0, sd);
    const auto numer = static_cast<long>(std::llround(raw * double(big_n)));
    Rational q(mpz_class(numer), denom);
    q.canonicalize();
    b[i] = q;
  }
  return b;
}

RationalGapInstance fullrank_to_gap_instance_rounded(const RationalMatrix& m,
                                                     RngStream& rng) {
  if (m.rows() != m.cols())
    throw std::invalid_argument(
        "fullrank_to_gap_instance_rounded: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0)
    throw std::invalid_argument("fullrank_to_gap_instance_rounded: empty");

  const Rational lo =
      n == 1 ? Rational(0) : Rational(1, static_cast<unsigned long>(n) * n);
  const Rational hi = n == 1 ? Rational(0)
                             : Rational(static_cast<unsigned long>(n) * n);

  const std::uint64_t nonce = rng.next_u64();
  for (std::size_t attempt = 0; attempt < kGapRetries; ++attempt) {
    RngStream draw = rng.derived(nonce + attempt);
    RationalVec b = sample_rounded_gaussian(n, draw);
    bool ok = true;
    for (const Rational& bi : b) {
      Rational mag = abs(bi);
      if (mag == 0 || (n > 1 && (mag < lo || mag > hi))) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    RationalGapInstance out;
    out.a = RationalMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational v = m.at(i, j) / b[i];
        out.a.set(i, j, std::move(v));
      }
    out.b = RationalVec(n, Rational(1));
    out.epsilon = std::pow(double(n), -12.0);
    out.retries = attempt;
    return out;
  }
  throw ReductionFailure(
      "fullrank_to_gap_instance_rounded: no in-range draw after retries");
}

RationalMatrix amplify_gap_rational(const RationalMatrix& a,
                                    const mpz_class& t) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("amplify_gap_rational: matrix not square");
  if (t <= 0) throw std::invalid_argument("amplify_gap_rational: t must be > 0");
  const std::size_t n = a.rows();
  const Rational tp1(t + 1);
  const Rational tq(t);
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t next = (i + 1) % n;
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = tp1 * a.at(i, j) - tq * a.at(next, j);
      out.set(i, j, std::move(v));
    }
  }
  return out;
}

}  // namespace linred
