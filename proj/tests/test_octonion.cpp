#include <doctest.h>

#include <random>

#include "curvlab/octonion.hpp"
#include "oracles.hpp"

using namespace curvlab;

namespace {

Octonion from(const oracle::O8& a) {
  Octonion o;
  for (std::size_t i = 0; i < 8; ++i) o[i] = a[i];
  return o;
}

Octonion draw(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Octonion a;
  for (std::size_t i = 0; i < 8; ++i) a[i] = g(rng);
  return a;
}

double dist(const Octonion& a, const Octonion& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 8; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("table agrees with quaternion doubling oracle") {
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const oracle::O8 p = oracle::omul(oracle::basis(i), oracle::basis(j));
      CHECK(dist(Octonion::basis(i) * Octonion::basis(j), from(p)) == 0.0);
    }
}

TEST_CASE("table structure") {
  for (std::size_t j = 0; j < 8; ++j) {
    CHECK(kOctonionTable[0][j].sign == 1);
    CHECK(kOctonionTable[0][j].index == static_cast<int>(j));
    CHECK(kOctonionTable[j][0].index == static_cast<int>(j));
  }
  for (std::size_t i = 1; i < 8; ++i) {
    CHECK(kOctonionTable[i][i].sign == -1);
    CHECK(kOctonionTable[i][i].index == 0);
    for (std::size_t j = 1; j < 8; ++j) {
      if (i == j) continue;
      CHECK(kOctonionTable[i][j].index == kOctonionTable[j][i].index);
      CHECK(kOctonionTable[i][j].sign == -kOctonionTable[j][i].sign);
    }
  }
}

TEST_CASE("random products match the oracle") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Octonion a = draw(rng), b = draw(rng);
    oracle::O8 x, y;
    for (std::size_t i = 0; i < 8; ++i) {
      x[i] = a[i];
      y[i] = b[i];
    }
    CHECK(dist(a * b, from(oracle::omul(x, y))) < 1e-14);
  }
}

TEST_CASE("norm, conjugation and inverse") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const Octonion a = draw(rng), b = draw(rng);
    CHECK(norm_sq(a * b) == doctest::Approx(norm_sq(a) * norm_sq(b)).epsilon(1e-13));
    CHECK(dist(conj(a * b), conj(b) * conj(a)) < 1e-13);
    CHECK(inner(a, b) == doctest::Approx(dot(to_vector(a), to_vector(b))).epsilon(1e-13));
    CHECK(dist(a * inverse(a), Octonion::unit()) < 1e-14);
    CHECK(dist(inverse(a) * a, Octonion::unit()) < 1e-14);
    CHECK(dist(a * conj(a), Octonion::real(norm_sq(a))) < 1e-13);
    CHECK(imag(a)[0] == 0.0);
  }
  CHECK_THROWS_AS(inverse(Octonion{}), std::domain_error);
}

TEST_CASE("alternative but not associative") {
  std::mt19937_64 rng(5);
  const Octonion a = draw(rng), b = draw(rng), c = draw(rng);
  CHECK(dist(a * (a * b), (a * a) * b) < 1e-13);
  CHECK(dist((a * b) * b, a * (b * b)) < 1e-13);
  CHECK(dist((a * b) * a, a * (b * a)) < 1e-13);
  CHECK(dist((a * b) * c, a * (b * c)) > 1e-3);
  const Octonion e1 = Octonion::basis(1), e2 = Octonion::basis(2), e4 = Octonion::basis(4);
  CHECK(dist((e1 * e2) * e4, -(e1 * (e2 * e4))) == 0.0);
}

TEST_CASE("multiplication operators") {
  std::mt19937_64 rng(8);
  const Octonion a = draw(rng), b = draw(rng);
  const Vector lb = left_mul_op(a) * to_vector(b);
  const Vector rb = right_mul_op(a) * to_vector(b);
  CHECK(max_abs_diff(lb, to_vector(a * b)) < 1e-14);
  CHECK(max_abs_diff(rb, to_vector(b * a)) < 1e-14);
  CHECK(max_abs_diff(left_mul_op(a).transpose() * left_mul_op(a), norm_sq(a) * Matrix::identity(8)) < 1e-13);
  CHECK(dist(to_octonion(to_vector(a)), a) == 0.0);
}

TEST_CASE("bioctonions") {
  using C = std::complex<double>;
  Bioctonion p = Bioctonion::real(C(0, 1)), q = Bioctonion::real(C(0, 1));
  p[1] = 1.0;
  q[1] = -1.0;
  const Bioctonion z = p * q;
  for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(z[i]) == 0.0);
  CHECK(std::abs(norm_sq(p)) == 0.0);

  std::mt19937_64 rng(1);
  const Octonion a = draw(rng), b = draw(rng);
  const Bioctonion ab = complexify(a) * complexify(b);
  const Octonion ref = a * b;
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(ab[i].real() == doctest::Approx(ref[i]));
    CHECK(ab[i].imag() == 0.0);
  }
  // Bilinear, not Hermitian: <i a, i a> = -|a|^2.
  const Bioctonion ia = C(0, 1) * complexify(a);
  CHECK(inner(ia, ia).real() == doctest::Approx(-norm_sq(a)));
}
