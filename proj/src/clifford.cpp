#include "curvlab/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "curvlab/octonion.hpp"

namespace curvlab {

double CliffordDefects::max() const { return std::max({skew, orthogonal, anticommute}); }

CliffordSystem::CliffordSystem(std::size_t n, std::vector<Matrix> generators, double tol)
    : n_(n), generators_(std::move(generators)) {
  const CliffordDefects d = defects(n_, generators_);
  if (!d.ok(tol))
    throw std::invalid_argument("CliffordSystem: generators violate the Clifford relations (defect " +
                                std::to_string(d.max()) + ")");
}

CliffordSystem CliffordSystem::unchecked(std::size_t n, std::vector<Matrix> generators) {
  CliffordSystem s;
  s.n_ = n;
  s.generators_ = std::move(generators);
  for (const auto& g : s.generators_)
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("CliffordSystem: generator has wrong shape");
  return s;
}

CliffordDefects defects(std::size_t n, const std::vector<Matrix>& generators) {
  CliffordDefects d;
  const Matrix id = Matrix::identity(n);
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("CliffordSystem: generator has wrong shape");
    d.skew = std::max(d.skew, skew_defect(g));
    d.orthogonal = std::max(d.orthogonal, orthogonality_defect(g));
  }
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i; j < generators.size(); ++j) {
      Matrix ac = generators[i] * generators[j] + generators[j] * generators[i];
      if (i == j) ac += 2.0 * id;
      d.anticommute = std::max(d.anticommute, max_abs(ac));
    }
  return d;
}

CliffordDefects validate(const CliffordSystem& sys) { return defects(sys.n(), sys.generators()); }

namespace {

using OctPairMap = std::function<std::pair<Octonion, Octonion>(const Octonion&, const Octonion&)>;

// Matrix of a real-linear map on O + O given pointwise.
Matrix matrix_of(const OctPairMap& f) {
  Matrix m(16, 16);
  for (std::size_t k = 0; k < 16; ++k) {
    Octonion a, b;
    if (k < 8) a[k] = 1.0; else b[k - 8] = 1.0;
    const auto [ra, rb] = f(a, b);
    for (std::size_t i = 0; i < 8; ++i) {
      m(i, k) = ra[i];
      m(i + 8, k) = rb[i];
    }
  }
  return m;
}

}  // namespace

CliffordSystem make_rho8() {
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < 8; ++i) {
    const Octonion p = Octonion::basis(i);
    gens.push_back(matrix_of([&](const Octonion& a, const Octonion& b) {
      return std::pair{b * p, -(a * conj(p))};
    }));
  }
  return CliffordSystem(16, std::move(gens));
}

CliffordSystem make_rho7() {
  std::vector<Matrix> gens;
  for (std::size_t i = 1; i < 8; ++i) {
    const Octonion p = Octonion::basis(i);
    gens.push_back(matrix_of([&](const Octonion& a, const Octonion& b) { return std::pair{a * p, b * p}; }));
  }
  return CliffordSystem(16, std::move(gens));
}

CliffordSystem restrict_to(const CliffordSystem& sys, std::size_t k) {
  if (k > sys.nu()) throw std::out_of_range("restrict_to: requested more generators than the system has");
  std::vector<Matrix> gens(sys.generators().begin(), sys.generators().begin() + static_cast<std::ptrdiff_t>(k));
  return CliffordSystem::unchecked(sys.n(), std::move(gens));
}

Vector j_u(const CliffordSystem& sys, std::span<const double> u, std::span<const double> x) {
  if (u.size() != sys.nu() || x.size() != sys.n()) throw std::invalid_argument("j_u: dimension mismatch");
  Vector out(sys.n(), 0.0);
  for (std::size_t i = 0; i < sys.nu(); ++i) {
    if (u[i] == 0.0) continue;
    axpy(u[i], sys.generator(i) * x, out);
  }
  return out;
}

std::vector<Vector> span_jx(const CliffordSystem& sys, std::span<const double> x) {
  if (x.size() != sys.n()) throw std::invalid_argument("span_jx: dimension mismatch");
  if (norm(x) == 0.0) throw std::invalid_argument("span_jx: zero vector");
  std::vector<Vector> vs;
  for (const auto& j : sys.generators()) vs.push_back(j * x);
  return orthonormalize(vs);
}

std::vector<Vector> span_ix(const CliffordSystem& sys, std::span<const double> x) {
  if (x.size() != sys.n()) throw std::invalid_argument("span_ix: dimension mismatch");
  if (norm(x) == 0.0) throw std::invalid_argument("span_ix: zero vector");
  std::vector<Vector> vs{Vector(x.begin(), x.end())};
  for (const auto& j : sys.generators()) vs.push_back(j * x);
  return orthonormalize(vs);
}

Matrix ordered_product(const CliffordSystem& sys, std::span<const std::size_t> indices) {
  Matrix p = Matrix::identity(sys.n());
  for (std::size_t i : indices) p = p * sys.generator(i);
  return p;
}

bool ReprFingerprint::parity_matches_rule() const {
  return std::all_of(parity_table.begin(), parity_table.end(),
                     [](const ParityEntry& e) { return e.symmetric == e.rule_symmetric; });
}

std::string ReprFingerprint::product_label() const {
  if (!product_sign) return "not +-id";
  return *product_sign > 0 ? "+id" : "-id";
}

ReprFingerprint fingerprint(const CliffordSystem& sys, double tol) {
  ReprFingerprint fp;
  const std::size_t nu = sys.nu();
  std::vector<std::size_t> idx;
  // Increasing index tuples of length 1..4, lexicographic.
  std::function<void(std::size_t)> walk = [&](std::size_t start) {
    if (!idx.empty()) {
      const Matrix p = ordered_product(sys, idx);
      ParityEntry e;
      e.indices = idx;
      e.symmetric = symmetry_defect(p) <= tol;
      const std::size_t m = idx.size() % 4;
      e.rule_symmetric = !(m == 1 || m == 2);
      fp.parity_table.push_back(std::move(e));
    }
    if (idx.size() == 4) return;
    for (std::size_t i = start; i < nu; ++i) {
      idx.push_back(i);
      walk(i + 1);
      idx.pop_back();
    }
  };
  walk(0);

  std::vector<std::size_t> all(nu);
  for (std::size_t i = 0; i < nu; ++i) all[i] = i;
  const Matrix prod = ordered_product(sys, all);
  const Matrix id = Matrix::identity(sys.n());
  fp.product_distance_plus = frobenius_norm(prod - id);
  fp.product_distance_minus = frobenius_norm(prod + id);
  if (max_abs_diff(prod, id) <= tol) fp.product_sign = 1;
  else if (max_abs_diff(prod, -id) <= tol) fp.product_sign = -1;
  return fp;
}

}  // namespace curvlab
