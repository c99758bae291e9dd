#include <doctest.h>

#include <cmath>

#include "linred/svd.hpp"
#include "test_support.hpp"

using namespace linred;
using linred::testing::rel_close;

namespace {

void check_decomposition(const DenseMatrix& a, double tol = 1e-12) {
  const SvdResult s = svd(a);
  const std::size_t m = a.rows(), n = a.cols(), k = std::min(m, n);
  REQUIRE(s.sigma.size() == k);
  for (std::size_t j = 0; j + 1 < k; ++j) CHECK(s.sigma[j] >= s.sigma[j + 1]);
  const double smax = s.sigma.empty() ? 0.0 : s.sigma.front();

  // Reconstruction: A == U diag(sigma) V^T.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t l = 0; l < k; ++l)
        acc += s.u.at(i, l) * s.sigma[l] * s.v.at(j, l);
      CHECK(std::fabs(acc - a.at(i, j)) <= tol * (smax + 1.0));
    }

  // Orthonormal columns wherever sigma is nonzero.
  for (std::size_t p = 0; p < k; ++p) {
    if (s.sigma[p] == 0.0) continue;
    for (std::size_t q = p; q < k; ++q) {
      if (s.sigma[q] == 0.0) continue;
      double uu = 0.0, vv = 0.0;
      for (std::size_t i = 0; i < m; ++i) uu += s.u.at(i, p) * s.u.at(i, q);
      for (std::size_t i = 0; i < n; ++i) vv += s.v.at(i, p) * s.v.at(i, q);
      const double want = p == q ? 1.0 : 0.0;
      CHECK(std::fabs(uu - want) <= 1e-11);
      CHECK(std::fabs(vv - want) <= 1e-11);
    }
  }
}

}  // namespace

TEST_CASE("svd of identity and diagonal matrices") {
  const SvdResult si = svd(DenseMatrix::identity(4));
  for (double s : si.sigma) CHECK(s == doctest::Approx(1.0));

  DenseMatrix d(3, 3);
  d.at(0, 0) = 1.0;
  d.at(1, 1) = -3.0;
  d.at(2, 2) = 2.0;
  const SvdResult sd = svd(d);
  CHECK(sd.sigma[0] == doctest::Approx(3.0));
  CHECK(sd.sigma[1] == doctest::Approx(2.0));
  CHECK(sd.sigma[2] == doctest::Approx(1.0));
}

TEST_CASE("svd reconstructs random matrices") {
  RngStream rng(31, 0);
  check_decomposition(testing::random_dense(8, 8, rng));
  check_decomposition(testing::random_dense(12, 5, rng));  // tall
  check_decomposition(testing::random_dense(5, 12, rng));  // wide
  check_decomposition(testing::random_dense(1, 7, rng));
  check_decomposition(testing::random_dense(7, 1, rng));
}

TEST_CASE("svd flags rank deficiency") {
  RngStream rng(32, 0);
  const DenseMatrix u = testing::random_dense(9, 3, rng);
  const DenseMatrix v = testing::random_dense(3, 9, rng);
  const DenseMatrix a = matmul(u, v);
  const SvdResult s = svd(a);
  CHECK(numerical_rank(s, 9, 9) == 3);
  check_decomposition(a, 1e-11);

  const SvdResult zero = svd(DenseMatrix(4, 4));
  CHECK(numerical_rank(zero, 4, 4) == 0);
}

TEST_CASE("symmetric eigenvalues of small known matrices") {
  DenseMatrix a(2, 2);
  a.at(0, 0) = 2.0;
  a.at(0, 1) = 1.0;
  a.at(1, 0) = 1.0;
  a.at(1, 1) = 2.0;
  const Vec eig = symmetric_eigenvalues(a);
  CHECK(eig[0] == doctest::Approx(1.0));
  CHECK(eig[1] == doctest::Approx(3.0));
}

TEST_CASE("symmetric eigenvalues match squared singular values on gram matrices")
{
  RngStream rng(33, 0);
  const DenseMatrix v = testing::random_dense(6, 6, rng);
  DenseMatrix gram(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      double acc = 0.0;
      for (std::size_t l = 0; l < 6; ++l) acc += v.at(i, l) * v.at(j, l);
      gram.at(i, j) = acc;
    }
  const Vec eig = symmetric_eigenvalues(gram);
  const SvdResult s = svd(v);
  for (std::size_t i = 0; i < 6; ++i) {
    const double want = s.sigma[5 - i] * s.sigma[5 - i];
    CHECK(rel_close(eig[i], want, 1e-9, 1e-9 * s.sigma[0] * s.sigma[0]));
  }
}
