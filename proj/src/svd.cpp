#include "linred/svd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "linred/kernels.hpp"

namespace linred {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSweeps = 64;

// One-sided Jacobi on the columns of w (m x n, m >= n): repeatedly rotates
// column pairs until all pairs are orthogonal to working precision. v
// accumulates the right-hand rotations.
void orthogonalize_columns(DenseMatrix& w, DenseMatrix& v) {
  const std::size_t m = w.rows(), n = w.cols();
  // Column-major scratch so the rotation loops run down contiguous memory.
  std::vector<Vec> col(n, Vec(m));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) col[j][i] = w.at(i, j);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    std::size_t rotations = 0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = kernels::sum_sq(col[p].data(), m);
        const double beta = kernels::sum_sq(col[q].data(), m);
        const double gamma = kernels::dot(col[p].data(), col[q].data(), m);
        if (gamma == 0.0) continue;
        if (std::fabs(gamma) <= kEps * std::sqrt(alpha * beta)) continue;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t =
            std::copysign(1.0, zeta) / (std::fabs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const double wp = col[p][i], wq = col[q][i];
          col[p][i] = c * wp - s * wq;
          col[q][i] = s * wp + c * wq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vp = v.at(i, p), vq = v.at(i, q);
          v.at(i, p) = c * vp - s * vq;
          v.at(i, q) = s * vp + c * vq;
        }
        ++rotations;
      }
    }
    if (rotations == 0) break;
  }

  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) w.at(i, j) = col[j][i];
}

SvdResult svd_tall(const DenseMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  DenseMatrix w = a;
  DenseMatrix v = DenseMatrix::identity(n);
  orthogonalize_columns(w, v);

  Vec sigma(n);
  for (std::size_t j = 0; j < n; ++j) {
    double ss = 0.0;
    for (std::size_t i = 0; i < m; ++i) ss += w.at(i, j) * w.at(i, j);
    sigma[j] = std::sqrt(ss);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  SvdResult out;
  out.u = DenseMatrix(m, n);
  out.v = DenseMatrix(n, n);
  out.sigma.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    out.sigma[j] = sigma[src];
    // Columns with sigma == 0 stay zero; consumers only use columns above
    // the rank cutoff.
    const double inv = sigma[src] > 0.0 ? 1.0 / sigma[src] : 0.0;
    for (std::size_t i = 0; i < m; ++i) out.u.at(i, j) = w.at(i, src) * inv;
    for (std::size_t i = 0; i < n; ++i) out.v.at(i, j) = v.at(i, src);
  }
  return out;
}

}  // namespace

SvdResult svd(const DenseMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0)
    throw std::invalid_argument("svd: empty matrix");
  if (a.rows() >= a.cols()) return svd_tall(a);
  SvdResult t = svd_tall(a.transposed());
  return {std::move(t.v), std::move(t.sigma), std::move(t.u)};
}

double rank_cutoff(std::size_t rows, std::size_t cols, double sigma_max) {
  return double(std::max(rows, cols)) * sigma_max * kEps * 64.0;
}

std::size_t numerical_rank(const SvdResult& s, std::size_t rows,
                           std::size_t cols) {
  if (s.sigma.empty()) return 0;
  const double cut = rank_cutoff(rows, cols, s.sigma.front());
  std::size_t r = 0;
  while (r < s.sigma.size() && s.sigma[r] > cut) ++r;
  return r;
}

Vec symmetric_eigenvalues(const DenseMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("symmetric_eigenvalues: matrix not square");
  const std::size_t n = a.rows();
  DenseMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      s.at(i, j) = 0.5 * (a.at(i, j) + a.at(j, i));

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += s.at(i, j) * s.at(i, j);
    double scale = kernels::max_abs(s.entries().data(), s.entries().size());
    if (std::sqrt(off) <= kEps * double(n) * scale || scale == 0.0) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = s.at(p, q);
        if (std::fabs(apq) <= kEps * scale) continue;
        const double theta = (s.at(q, q) - s.at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::fabs(theta) + std::hypot(1.0, theta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double sn = c * t;
        for (std::size_t k = 0; k < n; ++k) {
          const double skp = s.at(k, p), skq = s.at(k, q);
          s.at(k, p) = c * skp - sn * skq;
          s.at(k, q) = sn * skp + c * skq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double spk = s.at(p, k), sqk = s.at(q, k);
          s.at(p, k) = c * spk - sn * sqk;
          s.at(q, k) = sn * spk + c * sqk;
        }
      }
    }
  }

  Vec eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = s.at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace linred
