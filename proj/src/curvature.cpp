#include "curvlab/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "curvlab/kernels.hpp"
#include "curvlab/spin9.hpp"

namespace curvlab {

using kernels::Term;
using kernels::TermKind;

CurvatureTensor::CurvatureTensor(std::size_t n, std::vector<double> components)
    : n_(n), c_(std::move(components)) {
  if (c_.size() != n * n * n * n) throw std::invalid_argument("CurvatureTensor: expected n^4 components");
}

CurvatureTensor& CurvatureTensor::operator+=(const CurvatureTensor& o) {
  if (o.n_ != n_) throw std::invalid_argument("CurvatureTensor: dimension mismatch");
  for (std::size_t t = 0; t < c_.size(); ++t) c_[t] += o.c_[t];
  return *this;
}

CurvatureTensor& CurvatureTensor::operator-=(const CurvatureTensor& o) {
  if (o.n_ != n_) throw std::invalid_argument("CurvatureTensor: dimension mismatch");
  for (std::size_t t = 0; t < c_.size(); ++t) c_[t] -= o.c_[t];
  return *this;
}

CurvatureTensor& CurvatureTensor::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

CliffordSpec::CliffordSpec(CliffordSystem sys, double l0, Vector e)
    : system(std::move(sys)), lambda0(l0), eta(std::move(e)) {
  if (eta.size() != system.nu())
    throw std::invalid_argument("CliffordSpec: expected " + std::to_string(system.nu()) + " eta values");
  for (double v : eta)
    if (v == 0.0) throw std::invalid_argument("CliffordSpec: every eta must be nonzero");
}

namespace {

CurvatureTensor build(std::size_t n, const std::vector<Term>& terms) {
  CurvatureTensor r(n);
  kernels::assemble(n, terms, r.data());
  return r;
}

void require_symmetric(const Matrix& rho, std::size_t n, const char* what) {
  if (rho.rows() != n || rho.cols() != n) throw std::invalid_argument(std::string(what) + ": rho has wrong shape");
  if (symmetry_defect(rho) > kSymmetryTolerance * std::max(1.0, max_abs(rho)))
    throw std::invalid_argument(std::string(what) + ": rho must be symmetric");
}

void require_epsilon(int epsilon, const char* what) {
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument(std::string(what) + ": epsilon must be +1 or -1");
}

}  // namespace

CurvatureTensor constant_curvature(std::size_t n, double lambda0) {
  if (n < 2) throw std::invalid_argument("constant_curvature: n must be at least 2");
  const Matrix id = Matrix::identity(n);
  return build(n, {Term{TermKind::Wedge, lambda0, &id, &id}});
}

CurvatureTensor clifford_term(const Matrix& j) {
  if (!j.square()) throw std::invalid_argument("clifford_term: J must be square");
  return build(j.rows(), {Term{TermKind::Wedge, 1.0, &j, &j}, Term{TermKind::Scalar, 1.0, &j, &j}});
}

CurvatureTensor clifford_tensor(const CliffordSpec& spec) {
  const std::size_t n = spec.system.n();
  const Matrix id = Matrix::identity(n);
  std::vector<Term> terms{Term{TermKind::Wedge, spec.lambda0, &id, &id}};
  for (std::size_t i = 0; i < spec.system.nu(); ++i) {
    const Matrix* j = &spec.system.generator(i);
    terms.push_back(Term{TermKind::Wedge, spec.eta[i], j, j});
    terms.push_back(Term{TermKind::Scalar, spec.eta[i], j, j});
  }
  return build(n, terms);
}

CurvatureTensor spin9_sum() {
  static const CurvatureTensor cached = [] {
    const Spin9System sys = make_spin9();
    std::vector<Term> terms;
    for (std::size_t i = 0; i < 9; ++i) terms.push_back(Term{TermKind::Wedge, 1.0, &sys[i], &sys[i]});
    return build(16, terms);
  }();
  return cached;
}

CurvatureTensor cayley_tensor() { return cayley_combination(1.0, 0.0); }

CurvatureTensor cayley_combination(double a, double b) {
  CurvatureTensor r = constant_curvature(16, 3.0 * a + b);
  CurvatureTensor p = spin9_sum();
  p *= a;
  return r += p;
}

CurvatureTensor clifford_with_rho(const CliffordSystem& system, const Matrix& rho, std::span<const double> eta) {
  const std::size_t n = system.n();
  require_symmetric(rho, n, "clifford_with_rho");
  if (eta.size() != system.nu()) throw std::invalid_argument("clifford_with_rho: eta count must equal nu");
  const Matrix id = Matrix::identity(n);
  std::vector<Term> terms{Term{TermKind::Wedge, 1.0, &rho, &id}, Term{TermKind::Wedge, 1.0, &id, &rho}};
  for (std::size_t i = 0; i < system.nu(); ++i) {
    const Matrix* j = &system.generator(i);
    terms.push_back(Term{TermKind::Wedge, eta[i], j, j});
    terms.push_back(Term{TermKind::Scalar, eta[i], j, j});
  }
  return build(n, terms);
}

CurvatureTensor cayley_with_rho(const Matrix& rho, int epsilon, double f) {
  require_epsilon(epsilon, "cayley_with_rho");
  require_symmetric(rho, 16, "cayley_with_rho");
  const Matrix id = Matrix::identity(16);
  CurvatureTensor r = build(16, {Term{TermKind::Wedge, 1.0, &rho, &id}, Term{TermKind::Wedge, 1.0, &id, &rho}});
  CurvatureTensor p = spin9_sum();
  p *= epsilon * f;
  return r += p;
}

CurvatureTensor weyl_cayley(double f, int epsilon) {
  require_epsilon(epsilon, "weyl_cayley");
  CurvatureTensor r = constant_curvature(16, 0.6);
  r += spin9_sum();
  r *= epsilon * f;
  return r;
}

Matrix jacobi(const CurvatureTensor& r, std::span<const double> x) { return kernels::jacobi(r.n(), r.data(), x); }

Matrix ricci(const CurvatureTensor& r) { return sym_part(kernels::ricci(r.n(), r.data())); }

double scalar(const CurvatureTensor& r) { return ricci(r).trace(); }

CurvatureTensor weyl(const CurvatureTensor& r) {
  const std::size_t n = r.n();
  if (n < 4) throw std::invalid_argument("weyl: requires n >= 4");
  const Matrix ric = ricci(r);
  const double scal = ric.trace();
  const double nd = static_cast<double>(n);
  Matrix rho = (1.0 / (nd - 2.0)) * ric;
  const double shift = scal / (2.0 * (nd - 1.0) * (nd - 2.0));
  for (std::size_t i = 0; i < n; ++i) rho(i, i) -= shift;
  const Matrix id = Matrix::identity(n);
  CurvatureTensor w = r;
  kernels::assemble(n, std::vector<Term>{Term{TermKind::Wedge, -1.0, &rho, &id}, Term{TermKind::Wedge, -1.0, &id, &rho}},
                    w.data());
  return w;
}

double norm_sq(const CurvatureTensor& r) { return dot(r.data(), r.data()); }

double max_abs(const CurvatureTensor& r) {
  double m = 0.0;
  for (double v : r.data()) m = std::max(m, std::abs(v));
  return m;
}

double SymmetryReport::max() const { return std::max({antisym_first, antisym_second, pair, bianchi}); }

SymmetryReport validate_symmetries(const CurvatureTensor& r) {
  SymmetryReport rep;
  const std::size_t n = r.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const double v = r(i, j, k, l);
          rep.antisym_first = std::max(rep.antisym_first, std::abs(v + r(j, i, k, l)));
          rep.antisym_second = std::max(rep.antisym_second, std::abs(v + r(i, j, l, k)));
          rep.pair = std::max(rep.pair, std::abs(v - r(k, l, i, j)));
          rep.bianchi = std::max(rep.bianchi, std::abs(v + r(j, k, i, l) + r(k, i, j, l)));
        }
  return rep;
}

double sectional_curvature(const CurvatureTensor& r, std::size_t i, std::size_t j) {
  if (i == j || i >= r.n() || j >= r.n()) throw std::invalid_argument("sectional_curvature: need two distinct axes");
  return r(i, j, i, j);
}

double sectional_curvature(const CurvatureTensor& r, std::span<const double> x, std::span<const double> y) {
  const double area = dot(x, x) * dot(y, y) - dot(x, y) * dot(x, y);
  if (area <= 1e-300) throw std::invalid_argument("sectional_curvature: degenerate plane");
  const Vector ry = jacobi(r, x) * y;
  return dot(ry, y) / area;
}

CurvatureTensor conjugate(const CurvatureTensor& r, const Matrix& q) {
  const std::size_t n = r.n();
  if (q.rows() != n || q.cols() != n) throw std::invalid_argument("conjugate: Q has wrong shape");
  // Apply Q along one index at a time; each pass contracts the last index and rotates it to
  // the front.
  std::vector<double> cur(r.data().begin(), r.data().end());
  std::vector<double> next(cur.size());
  const std::size_t n3 = n * n * n;
  for (int pass = 0; pass < 4; ++pass) {
    // next[d][a][b][c] = sum_e Q_de cur[a][b][c][e]
    for (std::size_t abc = 0; abc < n3; ++abc)
      for (std::size_t d = 0; d < n; ++d) {
        double s = 0.0;
        for (std::size_t e = 0; e < n; ++e) s += q(d, e) * cur[abc * n + e];
        next[d * n3 + abc] = s;
      }
    std::swap(cur, next);
  }
  return CurvatureTensor(n, std::move(cur));
}

Matrix bivector_operator(const CurvatureTensor& r) {
  const std::size_t n = r.n();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  Matrix b(pairs.size(), pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t q = 0; q < pairs.size(); ++q) b(p, q) = r(pairs[p].first, pairs[p].second, pairs[q].first, pairs[q].second);
  return b;
}

Matrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = g(rng);
  return a;
}

Vector random_unit(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vector x(n);
  double nx = 0.0;
  while (nx < 1e-8) {
    for (double& v : x) v = g(rng);
    nx = norm(x);
  }
  return scaled(x, 1.0 / nx);
}

Matrix random_orthogonal(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Vector> cols(n, Vector(n));
  for (auto& c : cols)
    for (double& v : c) v = g(rng);
  std::vector<Vector> q = orthonormalize(cols, 0.0);
  while (q.size() < n) {
    Vector extra(n);
    for (double& v : extra) v = g(rng);
    q.push_back(extra);
    q = orthonormalize(q, 0.0);
  }
  return Matrix::from_columns(q);
}

CurvatureTensor random_curvature_tensor(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Matrix> as;
  std::vector<double> cs;
  for (int t = 0; t < 4; ++t) {
    as.push_back(random_symmetric(n, rng));
    cs.push_back(g(rng));
  }
  std::vector<Term> terms;
  for (std::size_t t = 0; t < as.size(); ++t) terms.push_back(Term{TermKind::Wedge, cs[t], &as[t], &as[t]});
  CurvatureTensor r = build(n, terms);
  const double m = max_abs(r);
  if (m > 0.0) r *= 1.0 / m;
  return r;
}

}  // namespace curvlab
