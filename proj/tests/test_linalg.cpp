#include <doctest.h>

#include <random>
#include <stdexcept>

#include "curvlab/curvature.hpp"
#include "curvlab/linalg.hpp"

using namespace curvlab;

TEST_CASE("matrix arithmetic") {
  Matrix a(2, 3);
  a(0, 0) = 1;
  a(0, 2) = 2;
  a(1, 1) = 3;
  const Matrix at = a.transpose();
  CHECK(at.rows() == 3);
  CHECK(at(2, 0) == 2);
  const Matrix p = a * at;
  CHECK(p(0, 0) == 5);
  CHECK(p(1, 1) == 9);
  CHECK(p(0, 1) == 0);
  const Vector v = a * Vector{1, 1, 1};
  CHECK(v == Vector{3, 3});
  CHECK(Matrix::identity(4).trace() == 4);
  CHECK_THROWS(a * a);
}

TEST_CASE("wedge convention") {
  const Vector x{1, 0, 0}, y{0, 1, 0};
  const Matrix w = wedge(x, y);
  // (X ^ Y) X = <X,X> Y - <Y,X> X = Y
  CHECK(max_abs_diff(w * x, y) == 0.0);
  CHECK(max_abs_diff(w * y, scaled(x, -1.0)) == 0.0);
  CHECK(skew_defect(w) == 0.0);
}

TEST_CASE("Jacobi eigensolver") {
  SUBCASE("2x2 closed form") {
    Matrix q(2, 2);
    q(0, 0) = 2;
    q(1, 1) = 3;
    q(0, 1) = q(1, 0) = 1;
    const auto e = jacobi_eigen(q);
    const double d = std::sqrt(5.0);
    CHECK(e.values[0] == doctest::Approx((5 - d) / 2).epsilon(1e-14));
    CHECK(e.values[1] == doctest::Approx((5 + d) / 2).epsilon(1e-14));
  }
  SUBCASE("random conjugated diagonal") {
    std::mt19937_64 rng(2);
    const Matrix o = random_orthogonal(12, rng);
    Vector d{-3, -3, -1, 0, 0, 0, 1, 2, 2, 2, 2, 5};
    const Matrix q = sym_part(o * Matrix::diagonal(d) * o.transpose());
    const auto e = jacobi_eigen(q);
    CHECK(max_abs_diff(e.values, d) < 1e-12);
    CHECK(orthogonality_defect(e.vectors) < 1e-12);
    CHECK(max_abs_diff(e.vectors * Matrix::diagonal(e.values) * e.vectors.transpose(), q) < 1e-12);
    const Spectrum s = sym_eig(q);
    CHECK(s.eigenvalues.size() == 6);
    CHECK(s.multiplicities == std::vector<int>{2, 1, 3, 1, 4, 1});
  }
  SUBCASE("non-symmetric input rejected") {
    Matrix q(2, 2);
    q(0, 1) = 1;
    CHECK_THROWS_AS(sym_eig(q), std::invalid_argument);
  }
}

TEST_CASE("clustering") {
  const Vector v{1.0, 1.0 + 1e-10, 2.0, 2.0 + 1e-3};
  CHECK(cluster_sorted(v, 1e-7) == std::vector<int>{0, 0, 1, 2});
}

TEST_CASE("subspaces") {
  std::mt19937_64 rng(4);
  std::vector<Vector> vs{random_unit(6, rng), random_unit(6, rng)};
  vs.push_back(add(vs[0], vs[1]));
  const auto b = orthonormalize(vs);
  CHECK(b.size() == 2);
  const auto c = orthogonal_complement(b, 6);
  CHECK(c.size() == 4);
  for (const auto& x : c)
    for (const auto& y : b) CHECK(std::abs(dot(x, y)) < 1e-13);
  CHECK(max_abs_diff(project(vs[2], b), vs[2]) < 1e-13);

  const Vector x = random_unit(9, rng);
  const Matrix cb = complement_basis(x);
  CHECK(cb.cols() == 8);
  CHECK(max_abs_diff(cb.transpose() * cb, Matrix::identity(8)) < 1e-14);
  CHECK(norm(cb.transpose() * x) < 1e-14);
}

TEST_CASE("polar factor and inverse square root") {
  std::mt19937_64 rng(6);
  const Matrix o = random_orthogonal(5, rng);
  Matrix p = Matrix::identity(5);
  p(0, 1) = p(1, 0) = 0.3;
  p(2, 2) = 2.0;
  const Matrix u = polar_factor(o * p);
  CHECK(max_abs_diff(u, o) < 1e-12);
  const Matrix s = inverse_sqrt_spd(p);
  CHECK(max_abs_diff(s * p * s, Matrix::identity(5)) < 1e-12);
}

TEST_CASE("least squares") {
  Matrix a(4, 2);
  a(0, 0) = 1;
  a(1, 1) = 1;
  a(2, 0) = 1;
  a(2, 1) = 1;
  a(3, 0) = 2;
  const Vector xt{0.5, -1.5};
  const Vector b = a * xt;
  CHECK(max_abs_diff(least_squares(a, b), xt) < 1e-12);
  Matrix r(2, 2);
  r(0, 0) = r(0, 1) = r(1, 0) = r(1, 1) = 1.0;
  const Vector mn = least_squares(r, Vector{2, 2});
  CHECK(max_abs_diff(mn, Vector{1, 1}) < 1e-12);
}
