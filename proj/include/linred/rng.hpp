#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace linred {

// Seeded, stream-addressable source of randomness. Every randomized routine
// in the library takes one of these; the same (seed, stream_id) pair always
// reproduces the same draw sequence, so whole reduction pipelines replay
// bit-for-bit. Distributions are implemented here rather than with
// std::*_distribution, whose output is not pinned down by the standard.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : seed_(seed), stream_(stream_id), engine_(mix(seed, stream_id)) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  // Fresh stream derived from this one's identity; used for bounded retries.
  RngStream derived(std::uint64_t salt) const {
    return RngStream(seed_, mix(stream_, salt));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return double(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound), bound >= 1. Multiply-shift with a
  // rejection pass to stay unbiased.
  std::uint64_t uniform_below(std::uint64_t bound) {
    for (;;) {
      std::uint64_t x = engine_();
      __uint128_t m = static_cast<__uint128_t>(x) * bound;
      auto lo = static_cast<std::uint64_t>(m);
      if (lo >= bound || lo >= (-bound) % bound) return std::uint64_t(m >> 64);
    }
  }

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + std::int64_t(uniform_below(std::uint64_t(hi - lo) + 1));
  }

  // N(mean, stddev^2) via the polar method (exact distribution).
  double normal(double mean = 0.0, double stddev = 1.0) {
    if (have_spare_) {
      have_spare_ = false;
      return mean + stddev * spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return mean + stddev * (u * f);
  }

 private:
  // splitmix64 finalizer; decorrelates nearby (seed, stream) pairs.
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace linred
