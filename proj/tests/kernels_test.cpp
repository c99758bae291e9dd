#include <doctest.h>

#include <cmath>
#include <vector>

#include "linred/kernels.hpp"
#include "linred/rng.hpp"

// Equivalence of every SIMD variant against the scalar reference path, over
// lengths that hit all the tail cases of the vector loops.

namespace {

using namespace linred;
namespace k = linred::kernels;

const std::vector<std::size_t> kLengths = {0, 1, 2, 3, 4, 5, 7, 8,
                                           9, 15, 16, 31, 33, 100, 1023};

struct Fixture {
  std::vector<double> x, y;
  std::vector<std::int32_t> idx;

  explicit Fixture(std::size_t n) {
    RngStream rng(42, n);
    x.resize(n);
    y.resize(n);
    idx.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = rng.normal(0.0, 3.0);
      y[i] = rng.normal(0.0, 3.0);
      idx[i] = std::int32_t(rng.uniform_below(n));
    }
  }
};

// Accumulation order differs between variants, so compare with a tolerance
// scaled to the absolute accumulation mass.
void check_variant(k::Isa isa) {
  if (!k::isa_supported(isa)) return;
  const k::Isa before = k::active_isa();
  REQUIRE(k::force_isa(isa));

  for (std::size_t n : kLengths) {
    Fixture f(n);
    const double tol = 1e-13 * double(n + 1);

    const double mass = k::scalar::sum_abs(f.x.data(), n) + 1.0;
    CHECK(std::fabs(k::dot(f.x.data(), f.y.data(), n) -
                    k::scalar::dot(f.x.data(), f.y.data(), n)) <=
          tol * mass * mass);
    CHECK(std::fabs(k::sum(f.x.data(), n) - k::scalar::sum(f.x.data(), n)) <=
          tol * mass);
    CHECK(std::fabs(k::sum_sq(f.x.data(), n) -
                    k::scalar::sum_sq(f.x.data(), n)) <= tol * mass * mass);
    CHECK(std::fabs(k::sum_abs(f.x.data(), n) -
                    k::scalar::sum_abs(f.x.data(), n)) <= tol * mass);
    CHECK(k::max_abs(f.x.data(), n) == k::scalar::max_abs(f.x.data(), n));
    if (n > 0)
      CHECK(std::fabs(k::dot_gather(f.x.data(), f.idx.data(), f.y.data(), n) -
                      k::scalar::dot_gather(f.x.data(), f.idx.data(),
                                            f.y.data(), n)) <=
            tol * mass * mass);

    // The fused multiply-add rounds once where the scalar path rounds
    // twice, so axpy can differ in the last ulp.
    std::vector<double> ya = f.y, yb = f.y;
    k::axpy(2.5, f.x.data(), ya.data(), n);
    k::scalar::axpy(2.5, f.x.data(), yb.data(), n);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::fabs(ya[i] - yb[i]) <=
            4e-16 * (std::fabs(yb[i]) + std::fabs(f.x[i])));

    std::vector<double> xa = f.x, xb = f.x;
    k::scale(xa.data(), -0.75, n);
    k::scalar::scale(xb.data(), -0.75, n);
    for (std::size_t i = 0; i < n; ++i) CHECK(xa[i] == xb[i]);
  }
  k::force_isa(before);
}

}  // namespace

TEST_CASE("simd variants match the scalar reference") {
  check_variant(k::Isa::avx2);
  check_variant(k::Isa::neon);
  check_variant(k::Isa::scalar);
}

TEST_CASE("dispatch reports a supported isa") {
  CHECK(k::isa_supported(k::active_isa()));
  CHECK(k::isa_supported(k::Isa::scalar));
}

TEST_CASE("gathered dot handles repeated indices") {
  const std::vector<double> vals = {1.0, 2.0, 3.0};
  const std::vector<std::int32_t> idx = {1, 1, 0};
  const std::vector<double> x = {10.0, 100.0};
  CHECK(k::dot_gather(vals.data(), idx.data(), x.data(), 3) ==
        doctest::Approx(1 * 100 + 2 * 100 + 3 * 10));
}
