#include <doctest.h>

#include <random>
#include <stdexcept>

#include "curvlab/curvature.hpp"
#include "curvlab/osserman.hpp"

using namespace curvlab;

namespace {

CurvatureTensor perturbed(const CurvatureTensor& r, double mag, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return r + mag * random_curvature_tensor(r.n(), rng);
}

}  // namespace

TEST_CASE("sample directions") {
  const auto d = sample_directions(16, 20, 1);
  REQUIRE(d.size() == 20);
  CHECK(d[3] == unit_vector(16, 3));
  CHECK(norm(d[19]) == doctest::Approx(1.0));
  CHECK(sample_directions(16, 20, 1)[18] == d[18]);
  CHECK_THROWS(sample_directions(16, 1, 1));
}

TEST_CASE("Osserman checker") {
  CHECK(osserman_check(constant_curvature(16, 1.0)).is_osserman);
  const CurvatureTensor c8 = clifford_tensor(CliffordSpec(make_rho8(), 1.0, Vector(8, 1.0)));
  const OssermanReport rep = osserman_check(c8);
  CHECK(rep.is_osserman);
  CHECK(rep.spectrum.multiplicities == std::vector<int>{7, 8});
  CHECK(rep.spectrum.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(rep.spectrum.eigenvalues[1] == doctest::Approx(4.0));
  CHECK(osserman_check(cayley_tensor()).is_osserman);
  CHECK(osserman_check(cayley_combination(0.3, -2.0)).is_osserman);

  Vector d(16);
  for (std::size_t i = 0; i < 16; ++i) d[i] = 1.0 + static_cast<double>(i);
  const CliffordSystem none = restrict_to(make_rho8(), 0);
  CHECK_FALSE(osserman_check(clifford_with_rho(none, Matrix::diagonal(d), Vector{})).is_osserman);
  CHECK_FALSE(osserman_check(perturbed(cayley_tensor(), 1e-2, 1), kDefaultSamples, 1e-4).is_osserman);
  const OssermanReport flat = osserman_check(CurvatureTensor(16));
  CHECK(flat.is_osserman);
  CHECK(flat.relative_deviation == 0.0);
}

TEST_CASE("multiplicity patterns") {
  CHECK(multiplicity_pattern(cayley_tensor()) == std::vector<int>{7, 8});
  CHECK(multiplicity_pattern(constant_curvature(16, 2.0)) == std::vector<int>{15});
  const Vector eta{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
  const auto p = multiplicity_pattern(clifford_tensor(CliffordSpec(make_rho7(), 1.0, eta)));
  CHECK(p == std::vector<int>{1, 1, 1, 1, 1, 1, 1, 8});
  CHECK_THROWS_AS(multiplicity_pattern(perturbed(cayley_tensor(), 1e-2, 2)), std::domain_error);
}

TEST_CASE("structure classification") {
  CHECK(classify_structure(CurvatureTensor(16)).primary.kind == StructureKind::Flat);
  CHECK(classify_structure(constant_curvature(16, -1.0)).primary.kind == StructureKind::ConstantCurvature);

  const Vector eta{-1.5, 0.5, 2.0};
  const StructureClass c = classify_structure(clifford_tensor(CliffordSpec(restrict_to(make_rho8(), 3), 0.2, eta)));
  CHECK(c.primary.name() == "CliffordCompatible(3)");
  CHECK(c.lambda0 == doctest::Approx(0.2));
  REQUIRE(c.eta.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(c.eta[i] == doctest::Approx(eta[i]).epsilon(1e-8));

  const StructureClass cc = classify_structure(cayley_combination(1.0, 1.0));
  CHECK(cc.primary.kind == StructureKind::CayleyCompatible);
  CHECK(cc.has({StructureKind::CliffordCompatible, 8}));

  const CurvatureTensor c8 = clifford_tensor(CliffordSpec(make_rho8(), 1.0, Vector(8, 1.0)));
  CHECK(classify_structure(weyl(c8)).has({StructureKind::CliffordCompatible, 8}));
  CHECK(classify_structure(perturbed(cayley_tensor(), 1e-2, 3)).primary.kind == StructureKind::NotOsserman);
}

TEST_CASE("conformally Osserman") {
  CHECK(conformally_osserman_check(cayley_tensor()).is_osserman);
  const Vector eta{1.0, -0.5};
  CHECK(conformally_osserman_check(clifford_tensor(CliffordSpec(restrict_to(make_rho7(), 2), 1.0, eta))).is_osserman);
}
