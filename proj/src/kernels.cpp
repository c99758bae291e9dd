#include "linred/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>

namespace linred::kernels {

namespace scalar {

double dot(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double dot_gather(const double* vals, const std::int32_t* idx, const double* x,
                  std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += vals[i] * x[idx[i]];
  return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double sum(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

double sum_sq(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

double sum_abs(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::fabs(x[i]);
  return acc;
}

double max_abs(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
  return m;
}

void scale(double* x, double a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

}  // namespace scalar

namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa detect_best() {
#if defined(__aarch64__)
  return Isa::neon;
#else
  if (cpu_has_avx2_fma()) {
    if (const char* env = std::getenv("LINRED_ISA");
        env && std::strcmp(env, "scalar") == 0)
      return Isa::scalar;
    return Isa::avx2;
  }
  return Isa::scalar;
#endif
}

Isa g_isa = detect_best();

}  // namespace

Isa active_isa() { return g_isa; }

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
      return cpu_has_avx2_fma();
    case Isa::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

bool force_isa(Isa isa) {
  if (!isa_supported(isa)) return false;
  g_isa = isa;
  return true;
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "?";
}

#if defined(__x86_64__) || defined(_M_X64)
#define LINRED_DISPATCH(fn, ...)                                   \
  switch (g_isa) {                                                 \
    case Isa::avx2:                                                \
      return avx2::fn(__VA_ARGS__);                                \
    default:                                                       \
      return scalar::fn(__VA_ARGS__);                              \
  }
#elif defined(__aarch64__)
#define LINRED_DISPATCH(fn, ...)                                   \
  switch (g_isa) {                                                 \
    case Isa::neon:                                                \
      return neon::fn(__VA_ARGS__);                                \
    default:                                                       \
      return scalar::fn(__VA_ARGS__);                              \
  }
#else
#define LINRED_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__);
#endif

double dot(const double* x, const double* y, std::size_t n) {
  LINRED_DISPATCH(dot, x, y, n)
}

double dot_gather(const double* vals, const std::int32_t* idx, const double* x,
                  std::size_t n) {
  LINRED_DISPATCH(dot_gather, vals, idx, x, n)
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  LINRED_DISPATCH(axpy, a, x, y, n)
}

double sum(const double* x, std::size_t n) { LINRED_DISPATCH(sum, x, n) }

double sum_sq(const double* x, std::size_t n) { LINRED_DISPATCH(sum_sq, x, n) }

double sum_abs(const double* x, std::size_t n) {
  LINRED_DISPATCH(sum_abs, x, n)
}

double max_abs(const double* x, std::size_t n) {
  LINRED_DISPATCH(max_abs, x, n)
}

void scale(double* x, double a, std::size_t n) {
  LINRED_DISPATCH(scale, x, a, n)
}

#undef LINRED_DISPATCH

}  // namespace linred::kernels
