// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma; callers must only reach it through the runtime dispatch.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

#include "linred/kernels.hpp"

namespace linred::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_max_sd(lo, shuf));
}

const __m256d kAbsMask =
    _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

}  // namespace

double dot(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4),
                           acc1);
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double dot_gather(const double* vals, const std::int32_t* idx, const double* x,
                  std::size_t n) {
  __m256d acc4 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m128i ind = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + i));
    __m256d xs = _mm256_i32gather_pd(x, ind, 8);
    acc4 = _mm256_fmadd_pd(_mm256_loadu_pd(vals + i), xs, acc4);
  }
  double acc = hsum(acc4);
  for (; i < n; ++i) acc += vals[i] * x[idx[i]];
  return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d yv = _mm256_loadu_pd(y + i);
    yv = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), yv);
    _mm256_storeu_pd(y + i, yv);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

double sum(const double* x, std::size_t n) {
  __m256d acc4 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc4 = _mm256_add_pd(acc4, _mm256_loadu_pd(x + i));
  double acc = hsum(acc4);
  for (; i < n; ++i) acc += x[i];
  return acc;
}

double sum_sq(const double* x, std::size_t n) {
  __m256d acc4 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(x + i);
    acc4 = _mm256_fmadd_pd(v, v, acc4);
  }
  double acc = hsum(acc4);
  for (; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

double sum_abs(const double* x, std::size_t n) {
  __m256d acc4 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc4 = _mm256_add_pd(acc4, _mm256_and_pd(_mm256_loadu_pd(x + i), kAbsMask));
  double acc = hsum(acc4);
  for (; i < n; ++i) acc += std::fabs(x[i]);
  return acc;
}

double max_abs(const double* x, std::size_t n) {
  __m256d m4 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    m4 = _mm256_max_pd(m4, _mm256_and_pd(_mm256_loadu_pd(x + i), kAbsMask));
  double m = hmax(m4);
  for (; i < n; ++i) m = std::fmax(m, std::fabs(x[i]));
  return m;
}

void scale(double* x, double a, std::size_t n) {
  __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

}  // namespace linred::kernels::avx2

#endif  // x86-64
