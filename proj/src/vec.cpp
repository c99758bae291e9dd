#include "linred/vec.hpp"

#include <cmath>
#include <stdexcept>

#include "linred/kernels.hpp"

namespace linred {

double lp_norm(const Vec& v, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  const std::size_t n = v.size();
  if (n == 0) return 0.0;
  if (p == kInf) return kernels::max_abs(v.data(), n);
  if (p == 2.0) return std::sqrt(kernels::sum_sq(v.data(), n));
  if (p == 1.0) return kernels::sum_abs(v.data(), n);
  // General p: scale by the max entry so |v_i/m|^p cannot overflow.
  double m = kernels::max_abs(v.data(), n);
  if (m == 0.0) return 0.0;
  double acc = 0.0;
  for (double x : v) acc += std::pow(std::fabs(x) / m, p);
  return m * std::pow(acc, 1.0 / p);
}

double dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
  return kernels::dot(x.data(), y.data(), x.size());
}

void axpy(double a, const Vec& x, Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("axpy: length mismatch");
  kernels::axpy(a, x.data(), y.data(), x.size());
}

OnesSplit split_along_ones(const Vec& z) {
  if (z.empty()) throw std::invalid_argument("split_along_ones: empty vector");
  const double gamma = -kernels::sum(z.data(), z.size()) / double(z.size());
  Vec y = z;
  for (double& yi : y) yi += gamma;
  return {std::move(y), gamma};
}

Vec sample_gaussian_vector(std::size_t n, double variance, RngStream& rng) {
  if (n == 0) throw std::invalid_argument("sample_gaussian_vector: n must be >= 1");
  if (!(variance > 0.0))
    throw std::invalid_argument("sample_gaussian_vector: variance must be > 0");
  const double sd = std::sqrt(variance);
  Vec v(n);
  for (double& vi : v) vi = rng.normal(0.0, sd);
  return v;
}

Vec ones(std::size_t n) { return Vec(n, 1.0); }
Vec zeros(std::size_t n) { return Vec(n, 0.0); }

bool all_finite(const Vec& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

double cycle_energy(const Vec& v) {
  const std::size_t n = v.size();
  if (n == 0) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double d = v[i] - v[(i + 1) % n];
    acc += d * d;
  }
  return acc;
}

}  // namespace linred
