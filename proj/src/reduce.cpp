#include "linred/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "linred/kernels.hpp"
#include "linred/oracle.hpp"
#include "linred/rational.hpp"
#include "linred/solve.hpp"

namespace linred {

namespace {

bool is_all_ones(const Vec& b) {
  for (double x : b)
    if (x != 1.0) return false;
  return true;
}

void fill_dims_before(ProvenanceStep& p, const SparseMatrix& m) {
  p.rows_before = m.rows();
  p.cols_before = m.cols();
  p.nnz_before = m.nnz();
}

void fill_dims_after(ProvenanceStep& p, const SparseMatrix& m) {
  p.rows_after = m.rows();
  p.cols_after = m.cols();
  p.nnz_after = m.nnz();
}

DeciderAnswer full_rank_answer(const SparseMatrix& witness, Backend backend) {
  if (backend == Backend::rational &&
      witness.rows() <= oracle::kRationalDimLimit &&
      witness.cols() <= oracle::kRationalDimLimit) {
    const std::size_t r = oracle::exact_rank(RationalMatrix::from_sparse(witness));
    return {r == witness.rows(), true};
  }
  DeciderAnswer ans;
  ans.at_least = lu_full_rank(witness.densify());
  // The rational backend falling through to the float test is a degraded
  // answer and gets flagged.
  ans.confident = backend == Backend::real;
  return ans;
}

}  // namespace

const char* promised_case_name(PromisedCase c) {
  switch (c) {
    case PromisedCase::yes:
      return "YES";
    case PromisedCase::no:
      return "NO";
    case PromisedCase::unknown:
      return "UNKNOWN";
  }
  return "?";
}

AmplifierParams AmplifierParams::for_gap(std::size_t n, double epsilon_in,
                                         double delta_out, bool integer_t) {
  if (!(epsilon_in > 0.0) || !(delta_out > 0.0))
    throw std::invalid_argument("AmplifierParams: gaps must be positive");
  AmplifierParams p;
  p.epsilon_in = epsilon_in;
  p.delta_out = delta_out;
  p.t = double(n) / (delta_out * epsilon_in);
  if (integer_t) p.t = std::ceil(p.t);
  return p;
}

std::size_t augment_sparsity_budget(std::size_t m, std::size_t r) {
  if (m == 0) return 0;
  const double lg = std::log(double(m));
  const double raw = double(m) * lg * lg / double(m - r + 1);
  const auto s = std::size_t(std::ceil(raw));
  return std::min(m, std::max<std::size_t>(1, s));
}

SparseMatrix augment_random_column(const SparseMatrix& m, std::size_t r,
                                   RngStream& rng, ProvenanceStep* prov) {
  const std::size_t rows = m.rows();
  if (r > rows)
    throw std::invalid_argument("augment_random_column: r exceeds row count");
  const std::size_t s = augment_sparsity_budget(rows, r);

  std::set<std::size_t> support;
  if (s >= rows) {
    for (std::size_t i = 0; i < rows; ++i) support.insert(i);
  } else {
    for (std::size_t draw = 0; draw < s; ++draw)
      support.insert(std::size_t(rng.uniform_below(rows)));
  }
  std::vector<std::pair<std::size_t, double>> col;
  col.reserve(support.size());
  for (std::size_t i : support) col.emplace_back(i, rng.normal());

  SparseMatrix out = m.with_column(col);
  if (prov) {
    prov->step = "augment_random_column";
    prov->seed = rng.seed();
    prov->stream = rng.stream();
    fill_dims_before(*prov, m);
    fill_dims_after(*prov, out);
    prov->params = {{"r", double(r)}, {"budget", double(s)}};
  }
  return out;
}

SparseMatrix augmented_rank_witness(const SparseMatrix& m, std::size_t k,
                                    RngStream& rng,
                                    std::vector<ProvenanceStep>* prov) {
  if (k > std::min(m.rows(), m.cols()))
    throw std::invalid_argument("augmented_rank_witness: k exceeds min(m, n)");
  SparseMatrix b = m;
  for (std::size_t i = 1; i + k <= m.rows(); ++i) {
    ProvenanceStep step;
    b = augment_random_column(b, k + i - 1, rng, prov ? &step : nullptr);
    if (prov) prov->push_back(std::move(step));
  }
  // Full column span -> full rank: the same procedure on the transpose adds
  // rows until the matrix is square.
  const std::size_t target = b.cols();
  if (b.rows() < target) {
    const std::size_t base_rows = b.rows();
    SparseMatrix bt = b.transposed();
    for (std::size_t j = 1; j + base_rows <= target; ++j) {
      ProvenanceStep step;
      bt = augment_random_column(bt, base_rows + j - 1, rng,
                                 prov ? &step : nullptr);
      if (prov) {
        step.step = "augment_random_row";
        prov->push_back(std::move(step));
      }
    }
    b = bt.transposed();
  }
  return b;
}

RankDecider make_rank_decider(Backend backend) {
  return [backend](const SparseMatrix& a, std::size_t k,
                   RngStream& rng) -> DeciderAnswer {
    if (k == 0) return {true, true};
    if (k > std::min(a.rows(), a.cols())) return {false, true};
    return full_rank_answer(augmented_rank_witness(a, k, rng), backend);
  };
}

FindRankResult find_rank(const SparseMatrix& a, const RankDecider& decider,
                         RngStream& rng) {
  FindRankResult out;
  std::size_t lo = 0;                                 // rank >= 0 always
  std::size_t hi = std::min(a.rows(), a.cols()) + 1;  // rank >= hi never
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const DeciderAnswer ans = decider(a, mid, rng);
    ++out.decider_calls;
    out.low_confidence |= !ans.confident;
    if (ans.at_least)
      lo = mid;
    else
      hi = mid;
  }
  out.rank = lo;
  return out;
}

SparseMatrix decision_from_rank(const SparseMatrix& a, const Vec& b) {
  if (a.rows() != b.size())
    throw std::invalid_argument("decision_from_rank: dimension mismatch");
  std::vector<std::pair<std::size_t, double>> col;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] != 0.0) col.emplace_back(i, b[i]);
  return a.with_column(col);
}

GapInstance fullrank_to_gap_instance(const SparseMatrix& m, RngStream& rng,
                                     PromisedCase claimed) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("fullrank_to_gap_instance: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0)
    throw std::invalid_argument("fullrank_to_gap_instance: empty matrix");

  // The row rescaling keeps the gap only while every |b_i| lies inside
  // [1/n^2, n^2]. At n = 1 that interval has empty interior, so any nonzero
  // draw is accepted there.
  const double lo = n == 1 ? 0.0 : 1.0 / (double(n) * double(n));
  const double hi = n == 1 ? kInf : double(n) * double(n);

  const std::uint64_t nonce = rng.next_u64();
  for (std::size_t attempt = 0; attempt < kGapRetries; ++attempt) {
    RngStream draw = rng.derived(nonce + attempt);
    const Vec b = sample_gaussian_vector(n, 1.0 / double(n), draw);
    bool in_range = true;
    for (double bi : b) {
      const double mag = std::fabs(bi);
      if (!(mag > lo) || !(mag <= hi)) {
        in_range = false;
        break;
      }
    }
    if (!in_range) continue;

    const auto& off = m.row_offsets();
    std::vector<SparseMatrix::Triplet> t;
    t.reserve(m.nnz());
    for (std::size_t i = 0; i < n; ++i)
      for (std::int64_t k = off[i]; k < off[i + 1]; ++k)
        t.push_back({i, std::size_t(m.col_indices()[k]), m.values()[k] / b[i]});

    GapInstance gi;
    gi.system.a = SparseMatrix(n, n, t);
    gi.system.b = ones(n);
    gi.epsilon = std::pow(double(n), -12.0);
    gi.promised = claimed;
    ProvenanceStep step;
    step.step = "fullrank_to_gap";
    step.seed = draw.seed();
    step.stream = draw.stream();
    fill_dims_before(step, m);
    fill_dims_after(step, gi.system.a);
    step.params = {{"epsilon", gi.epsilon},
                   {"variance", 1.0 / double(n)},
                   {"retries", double(attempt)}};
    gi.provenance.push_back(std::move(step));
    return gi;
  }
  throw ReductionFailure(
      "fullrank_to_gap_instance: no in-range Gaussian draw after retries");
}

LinearSystem amplify_gap(const LinearSystem& sys, const AmplifierParams& p,
                         ProvenanceStep* prov) {
  const SparseMatrix& a = sys.a;
  if (a.rows() != a.cols())
    throw std::invalid_argument("amplify_gap: matrix not square");
  if (!is_all_ones(sys.b))
    throw std::invalid_argument("amplify_gap: b must be the all-ones vector");
  if (!(p.t > 0.0)) throw std::invalid_argument("amplify_gap: t must be > 0");

  const std::size_t n = a.rows();
  const auto& off = a.row_offsets();
  const auto& col = a.col_indices();
  const auto& val = a.values();

  // Row i of the output is (t+1)*row_i - t*row_{i+1 mod n}.
  std::vector<SparseMatrix::Triplet> t;
  t.reserve(2 * a.nnz());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::int64_t k = off[i]; k < off[i + 1]; ++k)
      t.push_back({i, std::size_t(col[k]), (p.t + 1.0) * val[k]});
    const std::size_t next = (i + 1) % n;
    for (std::int64_t k = off[next]; k < off[next + 1]; ++k)
      t.push_back({i, std::size_t(col[k]), -p.t * val[k]});
  }

  LinearSystem out;
  out.a = SparseMatrix(n, n, t);
  out.b = ones(n);
  if (prov) {
    prov->step = "amplify_gap";
    fill_dims_before(*prov, a);
    fill_dims_after(*prov, out.a);
    prov->params = {{"t", p.t},
                    {"epsilon_in", p.epsilon_in},
                    {"delta_out", p.delta_out}};
  }
  return out;
}

RecoveryResult recover_solution(const LinearSystem& sys_orig, const Vec& x_prime,
                                const AmplifierParams& p) {
  (void)p;  // the bound ||A'x'-1|| <= (1-delta)||1|| is the caller's to check
  Vec z = matvec(sys_orig.a, x_prime);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] -= sys_orig.b[i];
  const OnesSplit split = split_along_ones(z);
  RecoveryResult out;
  out.gamma = split.gamma;
  const double denom = 1.0 - split.gamma;
  if (std::fabs(denom) < 1e-300) {
    out.degenerate = true;
    out.x = x_prime;
    return out;
  }
  out.x = x_prime;
  kernels::scale(out.x.data(), 1.0 / denom, out.x.size());
  return out;
}

DenseMatrix psd_lift(const DenseMatrix& v) {
  if (v.rows() != v.cols())
    throw std::invalid_argument("psd_lift: matrix not square");
  const std::size_t n = v.rows();
  DenseMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double g = kernels::dot(v.row_ptr(i), v.row_ptr(j), n);
      c.at(i, j) = g;
      c.at(j, i) = g;
    }
  }
  return c;
}

Vec psd_recover(const DenseMatrix& v, const Vec& x) {
  return matvec_transpose(v, x);
}

LpRecovery lp_recover(const LinearSystem& sys, const Vec& x_prime, double p,
                      double c) {
  if (!is_all_ones(sys.b))
    throw std::invalid_argument("lp_recover: b must be the all-ones vector");
  if (!(p >= 1.0)) throw std::invalid_argument("lp_recover: p must be >= 1");
  const std::size_t m = sys.a.rows();
  const std::size_t n = sys.a.cols();

  const Vec y = matvec(sys.a, x_prime);
  LpRecovery out;
  out.alpha = kernels::sum(y.data(), m) / double(m);
  out.epsilon = 2.0 / std::pow(double(n), c);

  Vec resid = y;
  for (double& ri : resid) ri -= 1.0;
  const double bound =
      (1.0 - std::pow(double(n), -c / 3.0)) * lp_norm(ones(m), p);
  out.precondition_met = lp_norm(resid, p) < bound;

  if (std::fabs(out.alpha) < 1e-300) {
    out.degenerate = true;
    out.x = zeros(x_prime.size());
    return out;
  }
  out.x = x_prime;
  kernels::scale(out.x.data(), out.epsilon / out.alpha, out.x.size());
  return out;
}

ResidualClass approx_decide_residual(const SparseMatrix& a, const Vec& x,
                                     const Vec& b, double epsilon,
                                     RngStream& rng,
                                     const ResidualDecideOptions& opt) {
  if (a.rows() != b.size() || a.cols() != x.size())
    throw std::invalid_argument("approx_decide_residual: dimension mismatch");
  const std::size_t m = a.rows();
  const double bnorm2 = kernels::sum_sq(b.data(), m);
  if (bnorm2 == 0.0) return ResidualClass::low;  // any x is exact for b = 0

  const double nn = double(std::max<std::size_t>(a.cols(), 2));
  const double lg = std::log(nn);
  const auto t = std::min<std::size_t>(
      opt.max_projections,
      std::max<std::size_t>(1, std::size_t(std::ceil(std::pow(lg, 6.0)))));
  const double round_denom = std::pow(nn, 6.0);
  const double threshold = (5.0 / 12.0) * epsilon * epsilon * bnorm2;

  std::size_t low_votes = 0;
  const std::size_t votes = std::max<std::size_t>(1, opt.majority_votes);
  for (std::size_t vote = 0; vote < votes; ++vote) {
    double q = 0.0;
    for (std::size_t i = 0; i < t; ++i) {
      Vec w = sample_gaussian_vector(m, 1.0 / double(m), rng);
      for (double& wk : w) wk = std::round(wk * round_denom) / round_denom;
      // (w^T A) x - w^T b: x only ever meets a length-n row vector.
      const Vec wa = matvec_transpose(a, w);
      const double s = kernels::dot(wa.data(), x.data(), x.size()) -
                       kernels::dot(w.data(), b.data(), m);
      q += s * s;
    }
    // E[<r, w_i>^2] = ||r||^2/m for w_i ~ N(0, 1/m)^m, so q*m/t concentrates
    // at ||r||^2; the 5/12 factor sits between the separated promise bounds.
    const double stat = q * double(m) / double(t);
    if (stat < threshold) ++low_votes;
  }
  return 2 * low_votes > votes ? ResidualClass::low : ResidualClass::high;
}

Decision decision_to_search_real(const SearchOracle& oracle,
                                 const GapInstance& inst) {
  const Vec x = oracle(inst.system);
  Vec r = matvec(inst.system.a, x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= inst.system.b[i];
  const double bnorm = lp_norm(inst.system.b);
  return lp_norm(r) <= inst.epsilon * bnorm ? Decision::yes : Decision::no;
}

PipelineResult compose_main_reduction(const SparseMatrix& a, double c,
                                      RngStream& rng,
                                      const PipelineOptions& opt) {
  if (!(c > 0.0))
    throw std::invalid_argument("compose_main_reduction: c must be > 0");
  PipelineResult out;

  std::size_t lo = 0;
  std::size_t hi = std::min(a.rows(), a.cols()) + 1;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    std::vector<ProvenanceStep> witness_steps;
    const SparseMatrix witness =
        augmented_rank_witness(a, mid, rng, &witness_steps);
    const DeciderAnswer ans = full_rank_answer(witness, opt.backend);
    ++out.rank.decider_calls;
    out.rank.low_confidence |= !ans.confident;
    const PromisedCase claimed =
        ans.at_least ? PromisedCase::yes : PromisedCase::no;

    for (std::size_t rep = 0;
         rep < std::max<std::size_t>(1, opt.repeats_per_step); ++rep) {
      GapInstance gi = fullrank_to_gap_instance(witness, rng, claimed);
      gi.provenance.insert(gi.provenance.begin(), witness_steps.begin(),
                           witness_steps.end());
      for (ProvenanceStep& s : gi.provenance) s.params.emplace("k", double(mid));

      const std::size_t np = gi.system.a.rows();
      if (opt.trace) out.instances.push_back(gi);

      const AmplifierParams amp =
          AmplifierParams::for_gap(np, gi.epsilon, std::pow(double(np), -c));
      ProvenanceStep amp_step;
      GapInstance amplified;
      amplified.system = amplify_gap(gi.system, amp, &amp_step);
      amplified.epsilon = 1.0 - std::pow(double(np), -c);
      amplified.promised = claimed;
      amplified.provenance = gi.provenance;
      amp_step.params.emplace("k", double(mid));
      amplified.provenance.push_back(std::move(amp_step));
      out.instances.push_back(std::move(amplified));
    }

    if (ans.at_least)
      lo = mid;
    else
      hi = mid;
  }
  out.rank.rank = lo;
  return out;
}

}  // namespace linred
