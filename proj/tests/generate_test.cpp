#include <doctest.h>

#include "linred/generate.hpp"
#include "linred/oracle.hpp"
#include "linred/report.hpp"
#include "linred/solve.hpp"
#include "linred/svd.hpp"
#include "test_support.hpp"

using namespace linred;

TEST_CASE("planted rank generator hits its target exactly") {
  RngStream rng(110, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 3 + rng.uniform_below(14);
    const std::size_t r = rng.uniform_below(n + 1);
    GenSpec spec;
    spec.kind = GenKind::planted_rank;
    spec.n = n;
    spec.rank = r;
    const GeneratedInstance gi = generate(spec, rng);
    REQUIRE(gi.true_rank.has_value());
    CHECK(*gi.true_rank == r);
    CHECK(oracle::exact_rank(RationalMatrix::from_sparse(gi.a)) == r);
  }
}

TEST_CASE("identity / zero / sparse generators") {
  RngStream rng(111, 0);
  GenSpec spec;
  spec.kind = GenKind::identity;
  spec.n = 4;
  CHECK(generate(spec, rng).a.densify().entries() ==
        DenseMatrix::identity(4).entries());

  spec.kind = GenKind::zero;
  spec.m = 3;
  spec.n = 5;
  const GeneratedInstance z = generate(spec, rng);
  CHECK(z.a.nnz() == 0);
  CHECK(z.a.rows() == 3);

  spec.kind = GenKind::sparse_gaussian;
  spec.m = 0;
  spec.n = 32;
  spec.nnz_target = 96;
  const GeneratedInstance s = generate(spec, rng);
  CHECK(s.a.nnz() <= 96);
  CHECK(s.a.nnz() >= 80);  // a few collisions are expected, not many
}

TEST_CASE("well conditioned generator respects its kappa budget") {
  RngStream rng(112, 0);
  GenSpec spec;
  spec.kind = GenKind::well_conditioned;
  spec.n = 32;
  spec.kappa_max = 1000.0;
  const GeneratedInstance gi = generate(spec, rng);
  const double kappa = estimate_condition_number(gi.a.densify());
  CHECK(kappa <= 1000.0);
  CHECK(kappa >= 100.0);  // the spectrum really is spread out
}

TEST_CASE("cycle laplacian plus identity is positive definite") {
  RngStream rng(113, 0);
  GenSpec spec;
  spec.kind = GenKind::cycle_laplacian;
  spec.n = 12;
  const GeneratedInstance gi = generate(spec, rng);
  const Vec eig = symmetric_eigenvalues(gi.a.densify());
  CHECK(eig.front() >= 1.0 - 1e-9);   // L + I shifts the zero mode to one
  CHECK(eig.back() <= 5.0 + 1e-9);
}

TEST_CASE("psd generator emits symmetric matrices") {
  RngStream rng(114, 0);
  GenSpec spec;
  spec.kind = GenKind::psd;
  spec.n = 10;
  const DenseMatrix a = generate(spec, rng).a.densify();
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) CHECK(a.at(i, j) == a.at(j, i));
  CHECK(symmetric_eigenvalues(a).front() >= -1e-9);
}

TEST_CASE("kind names round-trip") {
  for (GenKind k : {GenKind::identity, GenKind::zero, GenKind::dense_gaussian,
                    GenKind::sparse_gaussian, GenKind::planted_rank,
                    GenKind::psd, GenKind::well_conditioned,
                    GenKind::cycle_laplacian})
    CHECK(gen_kind_from_name(gen_kind_name(k)) == k);
  CHECK_THROWS_AS(gen_kind_from_name("nope"), std::invalid_argument);
}

TEST_CASE("provenance serialization and timing strip") {
  ProvenanceStep step;
  step.step = "amplify_gap";
  step.seed = 7;
  step.stream = 9;
  step.rows_before = 4;
  step.cols_before = 4;
  step.nnz_before = 8;
  step.rows_after = 4;
  step.cols_after = 4;
  step.nnz_after = 16;
  step.params = {{"t", 3.0}};
  const nlohmann::json j = to_json(step);
  CHECK(j["step"] == "amplify_gap");
  CHECK(j["params"]["t"] == 3.0);
  CHECK(j["nnz_after"] == 16);

  nlohmann::json report = {
      {"wall_ms", 12.5},
      {"trials", nlohmann::json::array({{{"ok", true}, {"wall_ms", 3.25}}})},
      {"config", {{"seed", 1}}}};
  strip_timing(report);
  CHECK_FALSE(report.contains("wall_ms"));
  CHECK_FALSE(report["trials"][0].contains("wall_ms"));
  CHECK(report["trials"][0]["ok"] == true);
  CHECK(report["config"]["seed"] == 1);
}
