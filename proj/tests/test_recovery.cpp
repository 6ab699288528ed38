#include <doctest.h>

#include <random>
#include <stdexcept>

#include "curvlab/curvature.hpp"
#include "curvlab/recovery.hpp"

using namespace curvlab;

TEST_CASE("spectral seed") {
  const CliffordSystem s = make_rho8();
  const CurvatureTensor r = clifford_tensor(CliffordSpec(s, 1.0, Vector(8, 1.0)));
  const Vector x0 = unit_vector(16, 1);
  const SpectralSeed seed = spectral_seed(r, x0);
  CHECK(seed.lambda0 == doctest::Approx(1.0));
  REQUIRE(seed.eta.size() == 8);
  for (double e : seed.eta) CHECK(e == doctest::Approx(1.0));
  // span(v) = span(J_i x0)
  for (const auto& j : s.generators()) {
    const Vector jx = j * x0;
    CHECK(norm(sub(jx, project(jx, seed.v))) < 1e-8);
  }
  const SpectralSeed cs = spectral_seed(cayley_tensor(), x0);
  CHECK(cs.v.size() == 8);
  CHECK(cs.lambda0 == doctest::Approx(4.0));
  CHECK(cs.eta.front() == doctest::Approx(-1.0));
  CHECK_THROWS_AS(spectral_seed(constant_curvature(16, 1.0), x0), std::domain_error);
}

TEST_CASE("clifford model reproduces clifford_tensor") {
  const CliffordSystem s = restrict_to(make_rho8(), 4);
  const Vector eta{0.3, -0.2, 1.5, 0.9};
  const CurvatureTensor a = clifford_model(s.generators(), 0.6, eta);
  CHECK(max_abs(a - clifford_tensor(CliffordSpec(s, 0.6, eta))) < 1e-14);
}

TEST_CASE("restoring a perturbed system") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  std::vector<Matrix> j = make_rho7().generators();
  for (auto& m : j)
    for (double& v : m.data()) v += 1e-3 * g(rng);
  const auto fixed = restore_clifford(j);
  REQUIRE(fixed.has_value());
  CHECK(defects(16, *fixed).max() < 1e-10);
  CHECK(max_abs_diff((*fixed)[0], make_rho7().generator(0)) < 1e-2);
  std::vector<Matrix> zero(2, Matrix(16, 16));
  CHECK_FALSE(restore_clifford(zero).has_value());
}

TEST_CASE("round trip with conjugation") {
  std::mt19937_64 rng(12);
  struct Case {
    CliffordSystem sys;
    double l0;
    Vector eta;
  };
  const std::vector<Case> cases{{restrict_to(make_rho8(), 2), -0.7, {1.2, -0.4}},
                                {make_rho7(), 1.1, {0.5, 0.5, -1.0, 1.5, -0.3, 0.8, 1.9}}};
  for (const auto& c : cases) {
    const CurvatureTensor r = conjugate(clifford_tensor(CliffordSpec(c.sys, c.l0, c.eta)), random_orthogonal(16, rng));
    RecoveryConfig cfg;
    cfg.nu = static_cast<int>(c.sys.nu());
    cfg.restarts = 2;
    cfg.seed = 5;
    const CliffordFit fit = reconstruct(r, cfg);
    CHECK(fit.success);
    CHECK(fit.residual <= 1e-6);
    CHECK(fit.constraint_violation <= 1e-8);
    CHECK(fit.lambda0 == doctest::Approx(c.l0).epsilon(1e-6));
    Vector want = c.eta;
    std::sort(want.begin(), want.end());
    CHECK(max_abs_diff(fit.sorted_eta(), want) <= 1e-6);
    CHECK(fit.verdict.kind == StructureKind::CliffordCompatible);
    CHECK(fit.verdict.nu == cfg.nu);
  }
}

TEST_CASE("algebraic stage alone is exact") {
  std::mt19937_64 rng(21);
  const std::vector<CliffordSpec> specs{CliffordSpec(restrict_to(make_rho8(), 3), 0.4, {-1.2, -1.1, 1.5}),
                                        CliffordSpec(make_rho8(), 1.7, {-1.9, -1.8, -1.6, -1.3, -1.2, 0.4, 1.2, 0.9})};
  for (const auto& spec : specs) {
    const CurvatureTensor r = conjugate(clifford_tensor(spec), random_orthogonal(16, rng));
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
      RecoveryConfig cfg;
      cfg.nu = static_cast<int>(spec.system.nu());
      cfg.restarts = 1;
      cfg.max_iterations = 0;
      cfg.seed = seed;
      const CliffordFit fit = reconstruct(r, cfg);
      CHECK(fit.stage1_residual < 1e-10);
      CHECK(fit.success);
    }
  }
}

TEST_CASE("degenerate inputs") {
  RecoveryConfig cfg;
  cfg.nu = 1;
  const CliffordFit k = reconstruct(constant_curvature(16, 2.0), cfg);
  CHECK(k.residual <= 1e-6);
  CHECK(k.eta_zero_rejected);
  CHECK_FALSE(k.success);
  CHECK(k.verdict.kind == StructureKind::ConstantCurvature);

  const CliffordFit z = reconstruct(CurvatureTensor(16), cfg);
  CHECK(z.verdict.kind == StructureKind::Flat);

  // nu = 3 needs a multiplicity-12 eigenvalue; the rho7 spectrum has none.
  cfg.nu = 3;
  const Vector eta{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
  const CliffordFit nf = reconstruct(clifford_tensor(CliffordSpec(make_rho7(), 1.0, eta)), cfg);
  CHECK_FALSE(nf.feasible);
  CHECK_FALSE(nf.success);

  cfg.nu = 9;
  CHECK_THROWS(cfg.validate());
}

TEST_CASE("cayley fit") {
  const CayleyFit f = fit_cayley(cayley_combination(0.4, -1.3));
  REQUIRE(f.available);
  CHECK(f.a == doctest::Approx(0.4));
  CHECK(f.b == doctest::Approx(-1.3));
  CHECK(f.residual < 1e-12);
  CHECK_FALSE(fit_cayley(constant_curvature(8, 1.0)).available);
  CHECK(fit_cayley(clifford_tensor(CliffordSpec(make_rho8(), 1.0, Vector(8, 1.0)))).residual > 1e-3);
}

TEST_CASE("probe verdicts") {
  ProbeConfig cfg;
  cfg.seed = 1;
  CHECK(conjecture_a_probe(CurvatureTensor(16), cfg).verdict == "Flat");
  CHECK(conjecture_a_probe(constant_curvature(16, 1.0), cfg).verdict == "ConstantCurvature");
  CHECK(conjecture_a_probe(cayley_combination(1.0, 2.0), cfg).verdict == "Cayley");
  const Vector eta{0.1, -0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
  CHECK(conjecture_a_probe(clifford_tensor(CliffordSpec(make_rho7(), 1.0, eta)), cfg).verdict == "Clifford(7)");
  std::mt19937_64 rng(2);
  const CurvatureTensor noisy = cayley_tensor() + 1e-2 * random_curvature_tensor(16, rng);
  CHECK(conjecture_a_probe(noisy, cfg).verdict == "NotOsserman");
}
