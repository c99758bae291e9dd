#pragma once

#include <cstddef>
#include <cstdint>

// Primitive arithmetic kernels behind all dense/sparse linear algebra in this
// library. Every kernel has a portable scalar reference implementation and,
// where the hardware supports it, a SIMD variant (AVX2+FMA on x86-64, NEON on
// aarch64). The active variant is picked once at startup from CPU feature
// detection and can be overridden (e.g. to cross-check SIMD against scalar).

namespace linred::kernels {

enum class Isa {
  scalar,
  avx2,
  neon,
};

// Variant selected for this process. Defaults to the best supported one.
Isa active_isa();

// True if `isa` can run on this CPU. `Isa::scalar` is always supported.
bool isa_supported(Isa isa);

// Override the dispatch (no-op with `false` return if unsupported).
bool force_isa(Isa isa);

const char* isa_name(Isa isa);

// --- dispatched kernels ----------------------------------------------------

double dot(const double* x, const double* y, std::size_t n);

// Dot product of packed values against gathered entries of x:
// sum_k vals[k] * x[idx[k]]. This is the CSR row kernel.
double dot_gather(const double* vals, const std::int32_t* idx, const double* x,
                  std::size_t n);

// y += a * x
void axpy(double a, const double* x, double* y, std::size_t n);

double sum(const double* x, std::size_t n);
double sum_sq(const double* x, std::size_t n);
double sum_abs(const double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);

// x *= a
void scale(double* x, double a, std::size_t n);

// --- reference path --------------------------------------------------------

// Plain scalar loops, always available; the SIMD variants are equivalence-
// tested against these.
namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
double dot_gather(const double* vals, const std::int32_t* idx, const double* x,
                  std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
double sum(const double* x, std::size_t n);
double sum_sq(const double* x, std::size_t n);
double sum_abs(const double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);
void scale(double* x, double a, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
double dot(const double* x, const double* y, std::size_t n);
double dot_gather(const double* vals, const std::int32_t* idx, const double* x,
                  std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
double sum(const double* x, std::size_t n);
double sum_sq(const double* x, std::size_t n);
double sum_abs(const double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);
void scale(double* x, double a, std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
double dot(const double* x, const double* y, std::size_t n);
double dot_gather(const double* vals, const std::int32_t* idx, const double* x,
                  std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
double sum(const double* x, std::size_t n);
double sum_sq(const double* x, std::size_t n);
double sum_abs(const double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);
void scale(double* x, double a, std::size_t n);
}  // namespace neon
#endif

}  // namespace linred::kernels
