// NEON kernel variants for aarch64.

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>

#include "linred/kernels.hpp"

namespace linred::kernels::neon {

double dot(const double* x, const double* y, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
  }
  for (; i + 2 <= n; i += 2)
    acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double dot_gather(const double* vals, const std::int32_t* idx, const double* x,
                  std::size_t n) {
  // No gather instruction on NEON; scalar loads with vector accumulate.
  float64x2_t acc2 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t xs = {x[idx[i]], x[idx[i + 1]]};
    acc2 = vfmaq_f64(acc2, vld1q_f64(vals + i), xs);
  }
  double acc = vaddvq_f64(acc2);
  for (; i < n; ++i) acc += vals[i] * x[idx[i]];
  return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  float64x2_t av = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), av, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] += a * x[i];
}

double sum(const double* x, std::size_t n) {
  float64x2_t acc2 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc2 = vaddq_f64(acc2, vld1q_f64(x + i));
  double acc = vaddvq_f64(acc2);
  for (; i < n; ++i) acc += x[i];
  return acc;
}

double sum_sq(const double* x, std::size_t n) {
  float64x2_t acc2 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t v = vld1q_f64(x + i);
    acc2 = vfmaq_f64(acc2, v, v);
  }
  double acc = vaddvq_f64(acc2);
  for (; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

double sum_abs(const double* x, std::size_t n) {
  float64x2_t acc2 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc2 = vaddq_f64(acc2, vabsq_f64(vld1q_f64(x + i)));
  double acc = vaddvq_f64(acc2);
  for (; i < n; ++i) acc += std::fabs(x[i]);
  return acc;
}

double max_abs(const double* x, std::size_t n) {
  float64x2_t m2 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) m2 = vmaxq_f64(m2, vabsq_f64(vld1q_f64(x + i)));
  double m = vmaxvq_f64(m2);
  for (; i < n; ++i) m = std::fmax(m, std::fabs(x[i]));
  return m;
}

void scale(double* x, double a, std::size_t n) {
  float64x2_t av = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vmulq_f64(av, vld1q_f64(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

}  // namespace linred::kernels::neon

#endif  // aarch64
