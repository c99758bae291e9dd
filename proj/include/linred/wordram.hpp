#pragma once

#include "linred/rational.hpp"
#include "linred/reduce.hpp"
#include "linred/rng.hpp"

// Bounded-word-size variants of the reductions: integer column augmentation,
// gap instances built from Gaussians rounded to fixed-denominator fractions,
// and integer-stencil amplification. These run on the exact rational backend
// so bit-level claims can be checked exactly.

namespace linred {

// Appends a column whose support follows the usual sparsity budget and whose
// entries are uniform integers in [1, N] with N = max(m, n)^5; succeeds with
// probability >= 1 - 1/max(m, n)^4 when rank(M) = r < m.
RationalMatrix augment_random_column_int(const RationalMatrix& m, std::size_t r,
                                         RngStream& rng,
                                         ProvenanceStep* prov = nullptr);

// N(0, 1/n) draws rounded to the nearest fraction a/N with N = n^5.
RationalVec sample_rounded_gaussian(std::size_t n, RngStream& rng);

struct RationalGapInstance {
  RationalMatrix a;  // rows rescaled by exact 1/b_i
  RationalVec b;     // all ones
  double epsilon = 0.0;
  std::size_t retries = 0;
};

// The rounded-draw version of fullrank_to_gap_instance; the same
// [1/n^2, n^2] magnitude gate and retry policy, all arithmetic exact.
RationalGapInstance fullrank_to_gap_instance_rounded(const RationalMatrix& m,
                                                     RngStream& rng);

// Integer-stencil amplification (t+1, -t cyclic) over exact rationals;
// b is the all-ones vector on both sides.
RationalMatrix amplify_gap_rational(const RationalMatrix& a, const mpz_class& t);

}  // namespace linred
