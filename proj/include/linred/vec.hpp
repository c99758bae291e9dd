#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "linred/rng.hpp"

namespace linred {

using Vec = std::vector<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// L_p norm for p >= 1; p = kInf gives the Chebyshev norm. Defaults to L_2.
// Throws std::invalid_argument for p < 1.
double lp_norm(const Vec& v, double p = 2.0);

double dot(const Vec& x, const Vec& y);

// y += a*x
void axpy(double a, const Vec& x, Vec& y);

// Splits z = y - gamma*1 with <y, 1> = 0; gamma = -(sum z_i)/n.
struct OnesSplit {
  Vec mean_zero;  // y
  double gamma;
};
OnesSplit split_along_ones(const Vec& z);

// n i.i.d. draws from N(0, variance), deterministic per stream.
Vec sample_gaussian_vector(std::size_t n, double variance, RngStream& rng);

Vec ones(std::size_t n);
Vec zeros(std::size_t n);

bool all_finite(const Vec& v);

// Cyclic edge-difference energy: sum_i (v_i - v_{i+1 mod n})^2. This is the
// quadratic form of the n-cycle Laplacian.
double cycle_energy(const Vec& v);

}  // namespace linred
