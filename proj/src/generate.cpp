#include "linred/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "linred/dense.hpp"
#include "linred/kernels.hpp"
#include "linred/reduce.hpp"

namespace linred {

GenKind gen_kind_from_name(const std::string& name) {
  if (name == "identity") return GenKind::identity;
  if (name == "zero") return GenKind::zero;
  if (name == "dense") return GenKind::dense_gaussian;
  if (name == "sparse") return GenKind::sparse_gaussian;
  if (name == "planted-rank") return GenKind::planted_rank;
  if (name == "psd") return GenKind::psd;
  if (name == "well-conditioned") return GenKind::well_conditioned;
  if (name == "cycle-laplacian") return GenKind::cycle_laplacian;
  throw std::invalid_argument("unknown generator kind: " + name);
}

const char* gen_kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::identity:
      return "identity";
    case GenKind::zero:
      return "zero";
    case GenKind::dense_gaussian:
      return "dense";
    case GenKind::sparse_gaussian:
      return "sparse";
    case GenKind::planted_rank:
      return "planted-rank";
    case GenKind::psd:
      return "psd";
    case GenKind::well_conditioned:
      return "well-conditioned";
    case GenKind::cycle_laplacian:
      return "cycle-laplacian";
  }
  return "?";
}

SparseMatrix planted_rank_matrix(std::size_t m, std::size_t n, std::size_t r,
                                 RngStream& rng) {
  if (r > std::min(m, n))
    throw std::invalid_argument("planted_rank_matrix: rank exceeds min(m, n)");
  if (r == 0) return SparseMatrix(m, n, {});

  // U = [I_r; R1] (m x r) and V = [I_r | R2] (r x n) both have rank exactly
  // r, so A = U V does too; small integer entries keep everything exact in
  // doubles and rationals.
  DenseMatrix u(m, r), v(r, n);
  for (std::size_t i = 0; i < r; ++i) {
    u.at(i, i) = 1.0;
    v.at(i, i) = 1.0;
  }
  for (std::size_t i = r; i < m; ++i)
    for (std::size_t j = 0; j < r; ++j)
      u.at(i, j) = double(rng.uniform_int(-2, 2));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = r; j < n; ++j)
      v.at(i, j) = double(rng.uniform_int(-2, 2));

  DenseMatrix a = matmul(u, v);

  // Random row/column permutations hide the planted block structure.
  std::vector<std::size_t> rp(m), cp(n);
  std::iota(rp.begin(), rp.end(), 0);
  std::iota(cp.begin(), cp.end(), 0);
  for (std::size_t i = m; i > 1; --i)
    std::swap(rp[i - 1], rp[rng.uniform_below(i)]);
  for (std::size_t j = n; j > 1; --j)
    std::swap(cp[j - 1], cp[rng.uniform_below(j)]);

  std::vector<SparseMatrix::Triplet> t;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.at(i, j) != 0.0) t.push_back({rp[i], cp[j], a.at(i, j)});
  return SparseMatrix(m, n, t);
}

DenseMatrix well_conditioned_matrix(std::size_t n, double kappa_target,
                                    RngStream& rng) {
  if (n == 0) throw std::invalid_argument("well_conditioned_matrix: n == 0");
  if (!(kappa_target >= 1.0))
    throw std::invalid_argument("well_conditioned_matrix: kappa must be >= 1");
  DenseMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    a.at(i, i) =
        n == 1 ? 1.0
               : std::pow(kappa_target, -double(i) / double(n - 1));

  // Householder reflections are exactly orthogonal up to roundoff; a few on
  // each side mix the spectrum into a dense matrix without moving kappa.
  auto reflect = [&](bool left) {
    Vec v = sample_gaussian_vector(n, 1.0, rng);
    const double norm = lp_norm(v);
    if (norm == 0.0) return;
    kernels::scale(v.data(), 1.0 / norm, n);
    if (left) {
      // A -= 2 v (v^T A)
      Vec vta = matvec_transpose(a, v);
      for (std::size_t i = 0; i < n; ++i)
        kernels::axpy(-2.0 * v[i], vta.data(), a.row_ptr(i), n);
    } else {
      // A -= 2 (A v) v^T
      Vec av = matvec(a, v);
      for (std::size_t i = 0; i < n; ++i)
        kernels::axpy(-2.0 * av[i], v.data(), a.row_ptr(i), n);
    }
  };
  const std::size_t sweeps = std::min<std::size_t>(n, 16);
  for (std::size_t k = 0; k < sweeps; ++k) {
    reflect(true);
    reflect(false);
  }
  return a;
}

GeneratedInstance generate(const GenSpec& spec, RngStream& rng) {
  const std::size_t n = spec.n;
  const std::size_t m = spec.m == 0 ? n : spec.m;
  if (n == 0) throw std::invalid_argument("generate: n must be >= 1");

  GeneratedInstance out;
  out.kind = gen_kind_name(spec.kind);
  switch (spec.kind) {
    case GenKind::identity: {
      if (m != n)
        throw std::invalid_argument("generate: identity must be square");
      out.a = SparseMatrix::identity(n);
      out.true_rank = n;
      break;
    }
    case GenKind::zero: {
      out.a = SparseMatrix(m, n, {});
      out.true_rank = 0;
      break;
    }
    case GenKind::dense_gaussian: {
      DenseMatrix a(m, n);
      for (double& x : a.entries()) x = rng.normal();
      out.a = SparseMatrix::from_dense(a);
      break;
    }
    case GenKind::sparse_gaussian: {
      const std::size_t target = spec.nnz_target == 0 ? 4 * n : spec.nnz_target;
      std::set<std::pair<std::size_t, std::size_t>> pos;
      for (std::size_t k = 0; k < target; ++k)
        pos.emplace(rng.uniform_below(m), rng.uniform_below(n));
      std::vector<SparseMatrix::Triplet> t;
      for (const auto& [i, j] : pos) t.push_back({i, j, rng.normal()});
      out.a = SparseMatrix(m, n, t);
      break;
    }
    case GenKind::planted_rank: {
      out.a = planted_rank_matrix(m, n, spec.rank, rng);
      out.true_rank = spec.rank;
      break;
    }
    case GenKind::psd: {
      if (m != n) throw std::invalid_argument("generate: psd must be square");
      DenseMatrix v(n, n);
      for (double& x : v.entries()) x = rng.normal();
      out.a = SparseMatrix::from_dense(psd_lift(v));
      break;
    }
    case GenKind::well_conditioned: {
      if (m != n)
        throw std::invalid_argument("generate: well-conditioned must be square");
      const double kappa =
          spec.kappa_max == 0.0 ? double(n) * double(n) : spec.kappa_max;
      // Build 10% inside the cap so the SVD estimate stays under it.
      out.a =
          SparseMatrix::from_dense(well_conditioned_matrix(n, 0.9 * kappa, rng));
      out.kappa_bound = kappa;
      out.true_rank = n;
      break;
    }
    case GenKind::cycle_laplacian: {
      if (m != n)
        throw std::invalid_argument("generate: cycle-laplacian must be square");
      std::vector<SparseMatrix::Triplet> t;
      for (std::size_t i = 0; i < n; ++i) {
        t.push_back({i, i, 3.0});  // degree 2 plus the identity shift
        if (n > 1) {
          t.push_back({i, (i + 1) % n, -1.0});
          t.push_back({i, (i + n - 1) % n, -1.0});
        }
      }
      out.a = SparseMatrix(n, n, t);
      out.true_rank = n;
      break;
    }
  }
  return out;
}

}  // namespace linred
