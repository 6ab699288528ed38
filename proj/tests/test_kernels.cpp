#include <doctest.h>

#include <random>
#include <stdexcept>

#include "curvlab/curvature.hpp"
#include "curvlab/kernels.hpp"

using namespace curvlab;
namespace k = curvlab::kernels;

namespace {

Matrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix m(n, n);
  for (double& v : m.data()) v = g(rng);
  return m;
}

}  // namespace

TEST_CASE("assemble: parallel equals serial") {
  std::mt19937_64 rng(1);
  const std::size_t n = 9;
  const Matrix a = random_matrix(n, rng), b = random_matrix(n, rng);
  const std::vector<k::Term> terms{{k::TermKind::Wedge, 0.7, &a, &b}, {k::TermKind::Scalar, -1.3, &b, &a}};
  std::vector<double> p(n * n * n * n, 0.0), s(n * n * n * n, 0.0);
  k::assemble(n, terms, p);
  k::assemble_serial(n, terms, s);
  CHECK(max_abs_diff(p, s) < 1e-13);
}

TEST_CASE("assemble: term formulas") {
  const std::size_t n = 3;
  Matrix a(n, n), b(n, n);
  a(1, 0) = 2.0;
  b(2, 1) = 5.0;
  std::vector<double> w(81, 0.0), sc(81, 0.0);
  const std::vector<k::Term> tw{{k::TermKind::Wedge, 1.0, &a, &b}};
  const std::vector<k::Term> ts{{k::TermKind::Scalar, 1.0, &a, &b}};
  k::assemble(n, tw, w);
  k::assemble(n, ts, sc);
  auto at = [&](const std::vector<double>& t, std::size_t i, std::size_t j, std::size_t kk, std::size_t l) {
    return t[((i * n + j) * n + kk) * n + l];
  };
  // A[k][i] B[l][j] - B[k][j] A[l][i] at (i,j,k,l) = (0,1,1,2): 2*5 - 0
  CHECK(at(w, 0, 1, 1, 2) == 10.0);
  // 2 A[j][i] B[l][k] at (0,1,1,2): 2*2*5
  CHECK(at(sc, 0, 1, 1, 2) == 20.0);
}

TEST_CASE("ricci and reduced spectra: parallel equals serial") {
  std::mt19937_64 rng(2);
  const CurvatureTensor r = random_curvature_tensor(16, rng);
  CHECK(max_abs_diff(k::ricci(16, r.data()), k::ricci_serial(16, r.data())) < 1e-14);
  std::vector<Vector> dirs;
  for (int i = 0; i < 6; ++i) dirs.push_back(random_unit(16, rng));
  const auto p = k::reduced_spectra(16, r.data(), dirs);
  const auto s = k::reduced_spectra_serial(16, r.data(), dirs);
  REQUIRE(p.size() == s.size());
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(max_abs_diff(p[i], s[i]) == 0.0);
}

TEST_CASE("clifford gradient matches finite differences") {
  std::mt19937_64 rng(3);
  const std::size_t n = 8;
  const CurvatureTensor w = random_curvature_tensor(n, rng);
  const Matrix j = random_matrix(n, rng);
  const Matrix g = k::clifford_gradient(n, w.data(), j);
  CHECK(max_abs_diff(g, k::clifford_gradient_serial(n, w.data(), j)) < 1e-12);

  const Matrix d = random_matrix(n, rng);
  auto f = [&](double h) {
    const Matrix jh = j + h * d;
    return k::inner(w.data(), clifford_term(jh).data());
  };
  const double h = 1e-5;
  const double fd = (f(h) - f(-h)) / (2.0 * h);
  CHECK(op_inner(g, d) == doctest::Approx(fd).epsilon(1e-7));
}

TEST_CASE("jacobi kernel agrees with the tensor method") {
  std::mt19937_64 rng(5);
  const CurvatureTensor r = random_curvature_tensor(10, rng);
  const Vector x = random_unit(10, rng);
  CHECK(max_abs_diff(k::jacobi(10, r.data(), x), jacobi(r, x)) < 1e-14);
  CHECK(k::max_threads() >= 1);
}
