#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "linred/dense.hpp"
#include "linred/rng.hpp"
#include "linred/sparse.hpp"
#include "linred/vec.hpp"

// The instance transformations: rank augmentation, randomized rank finding,
// gap-instance generation, gap amplification, solution recovery, the PSD
// lift, L_p-to-L_2 recovery, and the projection-based residual decider.
// Everything here is a pure function of its inputs and its RngStream.

namespace linred {

struct ReductionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One record per transformation applied; serialized into reports so a run
// can be replayed and audited.
struct ProvenanceStep {
  std::string step;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::size_t rows_before = 0, cols_before = 0, nnz_before = 0;
  std::size_t rows_after = 0, cols_after = 0, nnz_after = 0;
  std::map<std::string, double> params;
};

struct LinearSystem {
  SparseMatrix a;
  Vec b;
};

enum class PromisedCase { yes, no, unknown };

const char* promised_case_name(PromisedCase c);

// A linear system carrying a gap promise: YES means exactly satisfiable, NO
// means every x has residual > epsilon * ||b||.
struct GapInstance {
  LinearSystem system;
  double epsilon = 0.0;
  PromisedCase promised = PromisedCase::unknown;
  std::vector<ProvenanceStep> provenance;
};

struct AmplifierParams {
  double t = 0.0;
  double epsilon_in = 0.0;
  double delta_out = 0.0;

  // t = n / (delta * epsilon); set integer_t to round t up to the next
  // integer (the bounded-word-size variant).
  static AmplifierParams for_gap(std::size_t n, double epsilon_in,
                                 double delta_out, bool integer_t = false);
};

// --- rank machinery ---------------------------------------------------------

// Column sparsity budget for augmenting a rank >= r matrix with m rows:
// min(m, ceil(m * ln^2(m) / (m - r + 1))), clamped to at least 1.
std::size_t augment_sparsity_budget(std::size_t m, std::size_t r);

// Appends one sparse Gaussian column; if rank(M) = r < m the result has rank
// r+1 with high probability.
SparseMatrix augment_random_column(const SparseMatrix& m, std::size_t r,
                                   RngStream& rng,
                                   ProvenanceStep* prov = nullptr);

// Square witness for the decision "rank(M) >= k": appends m-k sparse random
// columns, then rows (the transposed procedure) until square. The witness
// has full rank iff rank(M) >= k, with high probability.
SparseMatrix augmented_rank_witness(const SparseMatrix& m, std::size_t k,
                                    RngStream& rng,
                                    std::vector<ProvenanceStep>* prov = nullptr);

enum class Backend { real, rational };

struct DeciderAnswer {
  bool at_least = false;
  bool confident = true;
};

// Answers "is rank(A) >= k?".
using RankDecider =
    std::function<DeciderAnswer(const SparseMatrix& a, std::size_t k,
                                RngStream& rng)>;

// Decider that augments to a square witness and runs a full-rank test on the
// chosen backend. Falls back to the float test (flagged not confident) when
// the exact backend's size ceiling is exceeded.
RankDecider make_rank_decider(Backend backend);

struct FindRankResult {
  std::size_t rank = 0;
  std::size_t decider_calls = 0;
  bool low_confidence = false;
};

// Binary search for the largest k with rank(A) >= k; O(log m) decider calls.
FindRankResult find_rank(const SparseMatrix& a, const RankDecider& decider,
                         RngStream& rng);

// [A b]: satisfiability of Ax = b reduces to comparing rank(A) with
// rank([A b]).
SparseMatrix decision_from_rank(const SparseMatrix& a, const Vec& b);

// --- gap machinery -----------------------------------------------------------

// Full-rank problem -> gap instance (M', 1^n) with epsilon = 1/n^12. Draws
// b ~ N(0, 1/n)^n and rescales row i by 1/b_i; a draw with any |b_i| outside
// [1/n^2, n^2] is retried on a fresh derived stream, up to kGapRetries times,
// then ReductionFailure is thrown.
inline constexpr std::size_t kGapRetries = 16;
GapInstance fullrank_to_gap_instance(const SparseMatrix& m, RngStream& rng,
                                     PromisedCase claimed = PromisedCase::unknown);

// (A, 1^n) -> (M*A, 1^n) with the cyclic stencil M_ii = t+1,
// M_{i,i+1 mod n} = -t. Satisfiable stays satisfiable; a NO gap of
// epsilon_in becomes 1 - delta_out at t = n/(delta*epsilon). Requires
// b = 1^n exactly.
LinearSystem amplify_gap(const LinearSystem& sys, const AmplifierParams& p,
                         ProvenanceStep* prov = nullptr);

struct RecoveryResult {
  Vec x;
  double gamma = 0.0;
  bool degenerate = false;
};

// Undoes the amplification: writes Ax' - 1 = y - gamma*1 with <y,1> = 0 and
// returns x = x'/(1 - gamma). Degenerate (|1-gamma| below 1e-300) results
// are flagged, not thrown.
RecoveryResult recover_solution(const LinearSystem& sys_orig, const Vec& x_prime,
                                const AmplifierParams& p);

// --- the PSD lift ------------------------------------------------------------

// V -> V V^T, symmetrized after the (plain cubic) multiplication. The minimum
// residual against any b is unchanged.
DenseMatrix psd_lift(const DenseMatrix& v);

// y = V^T x; ||V y - b|| equals ||V V^T x - b||.
Vec psd_recover(const DenseMatrix& v, const Vec& x);

// --- L_p recovery -------------------------------------------------------------

struct LpRecovery {
  Vec x;
  double alpha = 0.0;
  double epsilon = 0.0;  // 2 / n^c
  bool precondition_met = false;
  bool degenerate = false;
};

// Takes x' with ||Ax' - 1||_p < (1 - 1/n^{c/3}) ||1||_p and rescales it to
// x = (epsilon/alpha) x' meeting the L_2 bound (1 - 1/n^c). A violated
// precondition is flagged and the rescaling still returned best-effort.
LpRecovery lp_recover(const LinearSystem& sys, const Vec& x_prime, double p,
                      double c);

// --- residual decision --------------------------------------------------------

enum class ResidualClass { low, high };

struct ResidualDecideOptions {
  std::size_t max_projections = 4096;  // cap on t = ceil(ln^6 n)
  std::size_t majority_votes = 1;      // odd; 15 for w.h.p. amplification
};

// Distinguishes ||Ax-b|| <= eps||b||/2 (low) from >= eps||b|| (high) using
// t rounded random projections; each inner product is evaluated as
// (w^T A) x - w^T b so x is never multiplied by the full matrix.
ResidualClass approx_decide_residual(const SparseMatrix& a, const Vec& x,
                                     const Vec& b, double epsilon,
                                     RngStream& rng,
                                     const ResidualDecideOptions& opt = {});

enum class Decision { yes, no };

using SearchOracle = std::function<Vec(const LinearSystem&)>;

// Solve-then-confirm: runs the search oracle and answers YES iff the
// returned point meets the gap bound.
Decision decision_to_search_real(const SearchOracle& oracle,
                                 const GapInstance& inst);

// --- full chain ----------------------------------------------------------------

struct PipelineOptions {
  double c = 2.0;             // target gap 1 - 1/n^c
  Backend backend = Backend::real;
  bool trace = false;         // also emit pre-amplification instances
  std::size_t repeats_per_step = 1;
};

struct PipelineResult {
  FindRankResult rank;
  std::vector<GapInstance> instances;
};

// Rank finding -> full-rank witnesses -> gap instances -> amplification, per
// the composition order of the main reduction. Every emitted instance is
// square with b = 1 and gap 1 - 1/n'^c, and carries the provenance of each
// step applied to it.
PipelineResult compose_main_reduction(const SparseMatrix& a, double c,
                                      RngStream& rng,
                                      const PipelineOptions& opt = {});

}  // namespace linred
