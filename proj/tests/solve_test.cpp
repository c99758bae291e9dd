#include <doctest.h>

#include <cmath>

#include "linred/generate.hpp"
#include "linred/reduce.hpp"
#include "linred/solve.hpp"
#include "test_support.hpp"

using namespace linred;
using linred::testing::rel_close;
using linred::testing::residual_of;

TEST_CASE("solve_lu on identity and diagonal systems") {
  {
    const SolveResult r = solve_lu(DenseMatrix::identity(3), {1.0, 2.0, 3.0});
    CHECK(r.converged);
    CHECK(r.x[0] == doctest::Approx(1.0));
    CHECK(r.x[1] == doctest::Approx(2.0));
    CHECK(r.x[2] == doctest::Approx(3.0));
    CHECK(r.residual_l2 <= 1e-14);
  }
  {
    DenseMatrix a(2, 2);
    a.at(0, 0) = 2.0;
    a.at(1, 1) = 4.0;
    const SolveResult r = solve_lu(a, {2.0, 8.0});
    CHECK(r.converged);
    CHECK(r.x[0] == doctest::Approx(1.0));
    CHECK(r.x[1] == doctest::Approx(2.0));
  }
}

TEST_CASE("solve_lu recovers a planted solution") {
  RngStream rng(41, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const DenseMatrix a = well_conditioned_matrix(32, 100.0, rng);
    const Vec xs = testing::random_vec(32, rng);
    const Vec b = matvec(a, xs);
    const SolveResult r = solve_lu(a, b);
    REQUIRE(r.converged);
    for (std::size_t i = 0; i < 32; ++i)
      CHECK(std::fabs(r.x[i] - xs[i]) <= 1e-8 * (1.0 + lp_norm(xs)));
  }
}

TEST_CASE("solve_lu reports singular matrices instead of crashing") {
  const SolveResult zero = solve_lu(DenseMatrix(3, 3), {1.0, 0.0, 0.0});
  CHECK_FALSE(zero.converged);

  DenseMatrix rankdef(2, 2);
  rankdef.at(0, 0) = 1.0;
  rankdef.at(0, 1) = 2.0;
  rankdef.at(1, 0) = 2.0;
  rankdef.at(1, 1) = 4.0;
  CHECK_FALSE(solve_lu(rankdef, {1.0, 1.0}).converged);
}

TEST_CASE("solve result residual is consistent with a direct recomputation") {
  RngStream rng(42, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const DenseMatrix a = testing::random_dense(10, 10, rng);
    const Vec b = testing::random_vec(10, rng);
    const SolveResult r = solve_lu(a, b);
    if (!r.converged) continue;
    CHECK(rel_close(r.residual_l2, residual_of(a, r.x, b), 1e-9,
                    1e-9 * lp_norm(b)));
  }
}

TEST_CASE("least squares: satisfiable, 1-d projection, zero column") {
  RngStream rng(43, 0);
  {
    const DenseMatrix a = testing::random_dense(12, 7, rng);
    const Vec xs = testing::random_vec(7, rng);
    const Vec b = matvec(a, xs);
    const SolveResult r = solve_least_squares(a, b);
    CHECK(r.residual_l2 <= 1e-8 * lp_norm(b));
  }
  {
    DenseMatrix a(2, 1);
    a.at(0, 0) = 1.0;
    a.at(1, 0) = 1.0;
    const SolveResult r = solve_least_squares(a, {0.0, 2.0});
    CHECK(r.x[0] == doctest::Approx(1.0));
    CHECK(r.residual_l2 == doctest::Approx(std::sqrt(2.0)));
  }
  {
    DenseMatrix a = testing::random_dense(6, 3, rng);
    for (std::size_t i = 0; i < 6; ++i) a.at(i, 1) = 0.0;
    const SolveResult r = solve_least_squares(a, testing::random_vec(6, rng));
    CHECK(all_finite(r.x));
    // Minimum-norm solution leaves the dead coordinate at zero.
    CHECK(std::fabs(r.x[1]) <= 1e-12);
  }
}

TEST_CASE("least squares first-order optimality") {
  RngStream rng(44, 0);
  const DenseMatrix a = testing::random_dense(16, 8, rng);
  const Vec b = testing::random_vec(16, rng);
  const SolveResult r = solve_least_squares(a, b);
  const double base = residual_of(a, r.x, b);
  for (int dir = 0; dir < 100; ++dir) {
    Vec xp = r.x;
    const Vec d = testing::random_vec(8, rng);
    axpy(1e-3 / lp_norm(d), d, xp);
    CHECK(residual_of(a, xp, b) >= base - 1e-9);
  }
}

TEST_CASE("least squares residual equals projection remainder") {
  RngStream rng(45, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 10, n = 1 + rng.uniform_below(9);
    DenseMatrix a = testing::random_dense(m, n, rng);
    if (trial % 2 == 0 && n >= 2)  // make half the cases rank-deficient
      for (std::size_t i = 0; i < m; ++i) a.at(i, n - 1) = 2.0 * a.at(i, 0);
    const Vec b = testing::random_vec(m, rng);
    const SolveResult r = solve_least_squares(a, b);

    Vec remainder = b;
    for (const Vec& q : testing::column_space_basis(a)) {
      const double c = dot(q, remainder);
      axpy(-c, q, remainder);
    }
    CHECK(rel_close(r.residual_l2, lp_norm(remainder), 1e-8, 1e-8 * lp_norm(b)));
  }
}

TEST_CASE("cg converges in at most 8 steps on an 8-eigenvalue system") {
  std::vector<SparseMatrix::Triplet> t;
  for (std::size_t i = 0; i < 8; ++i) t.push_back({i, i, double(i + 1)});
  const SparseMatrix a(8, 8, t);
  const SolveResult r = solve_cg(a, ones(8), 64, 1e-10);
  CHECK(r.converged);
  CHECK(r.iterations <= 8);
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(r.x[i] == doctest::Approx(1.0 / double(i + 1)));
}

TEST_CASE("cg short-circuits b = 0") {
  const SolveResult r = solve_cg(SparseMatrix::identity(5), zeros(5), 10, 1e-8);
  CHECK(r.converged);
  CHECK(r.iterations == 0);
  CHECK(r.x == zeros(5));
}

TEST_CASE("cg solves a shifted cycle laplacian") {
  RngStream rng(46, 0);
  GenSpec spec;
  spec.kind = GenKind::cycle_laplacian;
  spec.n = 256;
  const GeneratedInstance gi = generate(spec, rng);
  const Vec b = testing::random_vec(256, rng);
  const SolveResult r = solve_cg(gi.a, b, 512, 1e-8);
  CHECK(r.converged);
  CHECK(r.residual_l2 <= 1e-8 * lp_norm(b));
}

TEST_CASE("cg reports non-convergence as a state") {
  RngStream rng(47, 0);
  const SparseMatrix a =
      SparseMatrix::from_dense(testing::random_dense(24, 24, rng));
  const SolveResult r = solve_cg(a, testing::random_vec(24, rng), 2, 1e-14);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 2);
}

TEST_CASE("condition number of identity and diagonal") {
  CHECK(estimate_condition_number(DenseMatrix::identity(5)) ==
        doctest::Approx(1.0));
  DenseMatrix d(2, 2);
  d.at(0, 0) = 10.0;
  d.at(1, 1) = 1.0;
  CHECK(estimate_condition_number(d) == doctest::Approx(10.0));
}

TEST_CASE("condition number of the amplification stencil matches the circulant formula") {
  const std::size_t n = 8;
  const double t = 4.0;
  std::vector<SparseMatrix::Triplet> trip;
  for (std::size_t i = 0; i < n; ++i) {
    trip.push_back({i, i, t + 1.0});
    trip.push_back({i, (i + 1) % n, -t});
  }
  const DenseMatrix m = SparseMatrix(n, n, trip).densify();

  // Circulants are normal, so the singular values are the eigenvalue
  // magnitudes |(t+1) - t e^{2 pi i k/n}|.
  double smax = 0.0, smin = kInf;
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2.0 * M_PI * double(k) / double(n);
    const double re = (t + 1.0) - t * std::cos(theta);
    const double im = t * std::sin(theta);
    const double mag = std::hypot(re, im);
    smax = std::max(smax, mag);
    smin = std::min(smin, mag);
  }
  CHECK(rel_close(estimate_condition_number(m), smax / smin, 1e-6));
}

TEST_CASE("condition number is infinite for rank-deficient input") {
  CHECK(estimate_condition_number(DenseMatrix(3, 3)) == kInf);
  RngStream rng(48, 0);
  const DenseMatrix tall = testing::random_dense(3, 5, rng);
  CHECK(estimate_condition_number(tall) == kInf);  // cols > rows
}
