#pragma once

#include <optional>
#include <string>

#include "linred/rng.hpp"
#include "linred/sparse.hpp"

// Instance generators for the CLI harness and the test suites, each with a
// planted ground truth where one exists.

namespace linred {

enum class GenKind {
  identity,
  zero,
  dense_gaussian,
  sparse_gaussian,   // target nnz, Gaussian values
  planted_rank,      // exact integer construction of the requested rank
  psd,               // V V^T from a Gaussian V
  well_conditioned,  // orthogonal * log-spaced spectrum * orthogonal
  cycle_laplacian,   // n-cycle Laplacian plus identity (SPD)
};

GenKind gen_kind_from_name(const std::string& name);
const char* gen_kind_name(GenKind kind);

struct GenSpec {
  GenKind kind = GenKind::dense_gaussian;
  std::size_t m = 0;  // rows; 0 means square (m = n)
  std::size_t n = 0;
  std::size_t rank = 0;        // planted_rank
  std::size_t nnz_target = 0;  // sparse_gaussian; 0 means 4n
  double kappa_max = 0.0;      // well_conditioned; 0 means n^2
};

struct GeneratedInstance {
  SparseMatrix a;
  std::string kind;
  std::optional<std::size_t> true_rank;
  std::optional<double> kappa_bound;
};

GeneratedInstance generate(const GenSpec& spec, RngStream& rng);

// Rank-deficient square matrix of exact integer entries with rank exactly r;
// the workhorse behind planted_rank.
SparseMatrix planted_rank_matrix(std::size_t m, std::size_t n, std::size_t r,
                                 RngStream& rng);

// Dense orthogonal-spectrum construction with kappa equal to kappa_target.
DenseMatrix well_conditioned_matrix(std::size_t n, double kappa_target,
                                    RngStream& rng);

}  // namespace linred
