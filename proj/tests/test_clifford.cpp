#include <doctest.h>

#include <random>
#include <stdexcept>

#include "curvlab/clifford.hpp"
#include "curvlab/curvature.hpp"
#include "oracles.hpp"

using namespace curvlab;

namespace {

// J_p(a, b) = (b p, -a p*) built column by column from the oracle product.
Matrix rho8_oracle(std::size_t p) {
  Matrix m(16, 16);
  for (std::size_t c = 0; c < 16; ++c) {
    oracle::O8 a{}, b{};
    if (c < 8)
      a[c] = 1.0;
    else
      b[c - 8] = 1.0;
    const oracle::O8 top = oracle::omul(b, oracle::basis(p));
    const oracle::O8 bot = oracle::omul(a, oracle::oconj(oracle::basis(p)));
    for (std::size_t r = 0; r < 8; ++r) {
      m(r, c) = top[r];
      m(r + 8, c) = -bot[r];
    }
  }
  return m;
}

}  // namespace

TEST_CASE("rho8 generators match the literal formula") {
  const CliffordSystem s = make_rho8();
  REQUIRE(s.nu() == 8);
  for (std::size_t p = 0; p < 8; ++p) CHECK(max_abs_diff(s.generator(p), rho8_oracle(p)) == 0.0);
}

TEST_CASE("rho7 generators are right multiplications on both summands") {
  const CliffordSystem s = make_rho7();
  REQUIRE(s.nu() == 7);
  for (std::size_t p = 1; p < 8; ++p) {
    const Matrix& j = s.generator(p - 1);
    for (std::size_t c = 0; c < 8; ++c) {
      const oracle::O8 ap = oracle::omul(oracle::basis(c), oracle::basis(p));
      for (std::size_t r = 0; r < 8; ++r) {
        CHECK(j(r, c) == ap[r]);
        CHECK(j(r + 8, c + 8) == ap[r]);
        CHECK(j(r + 8, c) == 0.0);
      }
    }
  }
}

TEST_CASE("Clifford relations and restrictions") {
  CHECK(validate(make_rho8()).max() == 0.0);
  CHECK(validate(make_rho7()).max() == 0.0);
  for (std::size_t k = 0; k <= 8; ++k) {
    const CliffordSystem r = restrict_to(make_rho8(), k);
    CHECK(r.nu() == k);
    CHECK(validate(r).ok());
  }
  CHECK_THROWS_AS(restrict_to(make_rho7(), 8), std::out_of_range);
}

TEST_CASE("invalid systems are rejected") {
  std::vector<Matrix> g = make_rho8().generators();
  g[1] = g[0];
  CHECK_THROWS_AS(CliffordSystem(16, g), std::invalid_argument);
  CHECK(defects(16, g).anticommute > 1.0);
  const CliffordSystem u = CliffordSystem::unchecked(16, g);
  CHECK(u.nu() == 8);
  std::vector<Matrix> sym{Matrix::identity(4)};
  CHECK_THROWS_AS(CliffordSystem(4, sym), std::invalid_argument);
}

TEST_CASE("product signs distinguish rho7 from restricted rho8") {
  const ReprFingerprint f7 = fingerprint(make_rho7());
  REQUIRE(f7.product_sign.has_value());
  CHECK(*f7.product_sign == 1);
  CHECK(f7.product_label() == "+id");
  const ReprFingerprint f87 = fingerprint(restrict_to(make_rho8(), 7));
  CHECK_FALSE(f87.product_sign.has_value());
  CHECK(f87.product_distance_plus >= 1.0);
  CHECK(f87.product_distance_minus >= 1.0);
  CHECK(f87.product_label() == "not +-id");
  CHECK(f7.parity_matches_rule());
  CHECK(f87.parity_matches_rule());
  CHECK(fingerprint(make_rho8()).parity_matches_rule());
}

TEST_CASE("orthogonal multiplication and spans") {
  std::mt19937_64 rng(21);
  const CliffordSystem s = make_rho8();
  const Vector x = random_unit(16, rng);
  const Vector u = random_unit(8, rng);
  CHECK(norm(j_u(s, u, x)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(span_jx(s, x).size() == 8);
  CHECK(span_ix(s, x).size() == 9);
  CHECK(span_jx(restrict_to(s, 3), x).size() == 3);
  CHECK_THROWS(span_jx(s, Vector(16, 0.0)));
  const std::vector<std::size_t> idx{0, 1};
  const Matrix p = ordered_product(s, idx);
  CHECK(max_abs_diff(p, s.generator(0) * s.generator(1)) == 0.0);
}
