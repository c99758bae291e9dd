#include "linred/solve.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "linred/kernels.hpp"
#include "linred/svd.hpp"

namespace linred {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct LuFactors {
  DenseMatrix lu;               // L below diagonal (unit), U on and above
  std::vector<std::size_t> piv; // row swap applied at step k
  bool singular = false;
};

LuFactors lu_factor(const DenseMatrix& a) {
  const std::size_t n = a.rows();
  LuFactors f{a, std::vector<std::size_t>(n), false};
  const double cutoff = rank_cutoff(n, n, a.max_abs());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::fabs(f.lu.at(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::fabs(f.lu.at(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    f.piv[k] = p;
    if (p != k)
      for (std::size_t j = 0; j < n; ++j)
        std::swap(f.lu.at(k, j), f.lu.at(p, j));
    if (best <= cutoff) {
      f.singular = true;
      return f;
    }
    const double inv = 1.0 / f.lu.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double lik = f.lu.at(i, k) * inv;
      f.lu.at(i, k) = lik;
      if (lik != 0.0)
        kernels::axpy(-lik, f.lu.row_ptr(k) + k + 1, f.lu.row_ptr(i) + k + 1,
                      n - k - 1);
    }
  }
  return f;
}

Vec lu_solve_factored(const LuFactors& f, Vec b) {
  const std::size_t n = b.size();
  // The factorization swaps whole rows, so all interchanges must hit b
  // before the triangular solves.
  for (std::size_t k = 0; k < n; ++k)
    if (f.piv[k] != k) std::swap(b[k], b[f.piv[k]]);
  for (std::size_t i = 1; i < n; ++i)
    b[i] -= kernels::dot(f.lu.row_ptr(i), b.data(), i);
  for (std::size_t k = n; k-- > 0;) {
    b[k] -= kernels::dot(f.lu.row_ptr(k) + k + 1, b.data() + k + 1, n - k - 1);
    b[k] /= f.lu.at(k, k);
  }
  return b;
}

double recompute_residual(const DenseMatrix& a, const Vec& x, const Vec& b) {
  Vec r = matvec(a, x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return lp_norm(r);
}

SolveResult least_squares_svd(const DenseMatrix& a, const Vec& b) {
  SvdResult s = svd(a);
  const double cutoff = rank_cutoff(a.rows(), a.cols(), s.sigma.front());
  Vec x(a.cols(), 0.0);
  for (std::size_t j = 0; j < s.sigma.size(); ++j) {
    if (s.sigma[j] <= cutoff) break;
    double uj_b = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) uj_b += s.u.at(i, j) * b[i];
    const double coef = uj_b / s.sigma[j];
    for (std::size_t i = 0; i < a.cols(); ++i) x[i] += coef * s.v.at(i, j);
  }
  SolveResult out;
  out.x = std::move(x);
  out.residual_l2 = recompute_residual(a, out.x, b);
  out.converged = true;
  return out;
}

}  // namespace

SolveResult solve_lu(const DenseMatrix& a, const Vec& b) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("solve_lu: matrix not square");
  if (a.cols() != b.size())
    throw std::invalid_argument("solve_lu: dimension mismatch");
  const std::size_t n = a.rows();
  SolveResult out;
  LuFactors f = lu_factor(a);
  if (f.singular) {
    out.x = zeros(n);
    out.residual_l2 = lp_norm(b);
    out.converged = false;
    return out;
  }
  Vec x = lu_solve_factored(f, b);
  // Two polish steps take the residual down to the backward-stable floor.
  for (int iter = 0; iter < 2; ++iter) {
    Vec r = matvec(a, x);
    for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - r[i];
    Vec d = lu_solve_factored(f, std::move(r));
    for (std::size_t i = 0; i < n; ++i) x[i] += d[i];
  }
  out.x = std::move(x);
  out.residual_l2 = recompute_residual(a, out.x, b);
  out.converged = all_finite(out.x);
  return out;
}

bool lu_full_rank(const DenseMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("lu_full_rank: matrix not square");
  if (a.rows() == 0) return true;
  return !lu_factor(a).singular;
}

SolveResult solve_least_squares(const DenseMatrix& a, const Vec& b) {
  if (a.rows() == 0) throw std::invalid_argument("solve_least_squares: empty");
  if (a.rows() != b.size())
    throw std::invalid_argument("solve_least_squares: dimension mismatch");
  const std::size_t m = a.rows(), n = a.cols();
  if (m < n) return least_squares_svd(a, b);

  // Householder QR, reflectors stored below the diagonal.
  DenseMatrix r = a;
  Vec qtb = b;
  Vec beta(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double norm = 0.0;
    for (std::size_t i = k; i < m; ++i) norm += r.at(i, k) * r.at(i, k);
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    const double alpha = r.at(k, k) >= 0.0 ? -norm : norm;
    const double v0 = r.at(k, k) - alpha;
    r.at(k, k) = alpha;
    // v = (v0, r_{k+1..m,k}); beta = 2 / ||v||^2
    double vv = v0 * v0;
    for (std::size_t i = k + 1; i < m; ++i) vv += r.at(i, k) * r.at(i, k);
    beta[k] = 2.0 / vv;
    for (std::size_t j = k + 1; j < n; ++j) {
      double dotv = v0 * r.at(k, j);
      for (std::size_t i = k + 1; i < m; ++i) dotv += r.at(i, k) * r.at(i, j);
      const double f = beta[k] * dotv;
      r.at(k, j) -= f * v0;
      for (std::size_t i = k + 1; i < m; ++i) r.at(i, j) -= f * r.at(i, k);
    }
    double dotv = v0 * qtb[k];
    for (std::size_t i = k + 1; i < m; ++i) dotv += r.at(i, k) * qtb[i];
    const double f = beta[k] * dotv;
    qtb[k] -= f * v0;
    for (std::size_t i = k + 1; i < m; ++i) qtb[i] -= f * r.at(i, k);
    // The reflector tail stays below the diagonal; entry (k,k) now holds
    // R_kk = alpha.
  }

  double rmax = 0.0;
  for (std::size_t k = 0; k < n; ++k) rmax = std::max(rmax, std::fabs(r.at(k, k)));
  const double cutoff = double(std::max(m, n)) * rmax * kEps * 64.0;
  for (std::size_t k = 0; k < n; ++k)
    if (std::fabs(r.at(k, k)) <= cutoff) return least_squares_svd(a, b);

  Vec x(n);
  for (std::size_t k = n; k-- > 0;) {
    double s = qtb[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= r.at(k, j) * x[j];
    x[k] = s / r.at(k, k);
  }
  SolveResult out;
  out.x = std::move(x);
  out.residual_l2 = recompute_residual(a, out.x, b);
  out.converged = true;
  return out;
}

SolveResult solve_cg(const SparseMatrix& a, const Vec& b,
                     std::size_t max_iters, double tol) {
  if (a.rows() != b.size())
    throw std::invalid_argument("solve_cg: dimension mismatch");
  SolveResult out;
  out.x = zeros(a.cols());
  const double bnorm = lp_norm(b);
  if (bnorm == 0.0) {
    out.converged = true;
    return out;
  }

  // CGLS recurrence for the normal equations A^T A x = A^T b.
  Vec r = b;
  Vec s = matvec_transpose(a, r);
  Vec p = s;
  double gamma = kernels::sum_sq(s.data(), s.size());
  std::size_t it = 0;
  bool converged = false;
  while (it < max_iters && gamma > 0.0) {
    Vec q = matvec(a, p);
    const double qq = kernels::sum_sq(q.data(), q.size());
    if (qq == 0.0) break;
    const double alpha = gamma / qq;
    axpy(alpha, p, out.x);
    axpy(-alpha, q, r);
    ++it;
    if (lp_norm(r) <= tol * bnorm) {
      converged = true;
      break;
    }
    s = matvec_transpose(a, r);
    const double gamma_new = kernels::sum_sq(s.data(), s.size());
    const double betak = gamma_new / gamma;
    gamma = gamma_new;
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = s[i] + betak * p[i];
  }
  out.iterations = it;
  Vec res = matvec(a, out.x);
  for (std::size_t i = 0; i < res.size(); ++i) res[i] -= b[i];
  out.residual_l2 = lp_norm(res);
  out.converged = converged || out.residual_l2 <= tol * bnorm;
  return out;
}

double estimate_condition_number(const DenseMatrix& a) {
  if (a.rows() < a.cols())
    return kInf;  // full column rank impossible
  SvdResult s = svd(a);
  const double smax = s.sigma.front();
  const double smin = s.sigma.back();
  if (smin <= rank_cutoff(a.rows(), a.cols(), smax)) return kInf;
  return smax / smin;
}

}  // namespace linred
