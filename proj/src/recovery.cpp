#include "curvlab/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>

#include "curvlab/kernels.hpp"

namespace curvlab {

using kernels::Term;
using kernels::TermKind;

void RecoveryConfig::validate() const {
  if (nu < 1 || nu > 8) throw std::invalid_argument("RecoveryConfig: nu must be in 1..8");
  if (restarts < 1) throw std::invalid_argument("RecoveryConfig: restarts must be positive");
  if (max_iterations < 0 || cg_iterations < 1 || max_backtracks < 0 || extra_directions < 1)
    throw std::invalid_argument("RecoveryConfig: invalid iteration limits");
  if (!(fit_tolerance > 0.0) || !(constraint_tolerance > 0.0) || !(spectral_tolerance > 0.0))
    throw std::invalid_argument("RecoveryConfig: tolerances must be positive");
}

Vector CliffordFit::sorted_eta() const {
  Vector e = eta;
  std::sort(e.begin(), e.end());
  return e;
}

namespace {

// Reduced Jacobi eigendecomposition at x with eigenvectors mapped back to R^n.
struct ReducedEigen {
  Spectrum spectrum;
  Matrix basis;  // n x (n-1), column k is the eigenvector for spectrum.raw[k]
};

ReducedEigen reduced_eigen(const CurvatureTensor& r, std::span<const double> x, double tol) {
  const Matrix b = complement_basis(x);
  ReducedEigen out;
  out.spectrum = sym_eig(sym_part(b.transpose() * jacobi(r, x) * b), tol);
  out.basis = b * out.spectrum.basis;
  return out;
}

std::vector<Vector> cluster_columns(const ReducedEigen& e, std::size_t c) {
  std::vector<Vector> vs;
  for (std::size_t k = 0; k < e.spectrum.raw.size(); ++k)
    if (static_cast<std::size_t>(e.spectrum.cluster_of[k]) == c) vs.push_back(e.basis.column(k));
  return vs;
}

SpectralSeed seed_with(const ReducedEigen& e, std::size_t lam) {
  SpectralSeed s;
  s.lambda0 = e.spectrum.eigenvalues[lam];
  for (std::size_t c = 0; c < e.spectrum.eigenvalues.size(); ++c) {
    if (c == lam) continue;
    for (auto& v : cluster_columns(e, c)) {
      s.v.push_back(std::move(v));
      s.eta.push_back((e.spectrum.eigenvalues[c] - s.lambda0) / 3.0);
    }
  }
  return s;
}

// Cluster read as lambda0: the smallest multiplicity m with 1 <= n-1-m <= 8 (largest admissible
// nu), ties toward the smaller value; the most-multiple cluster if none is admissible.
std::size_t lambda0_cluster(const Spectrum& s, std::size_t n) {
  std::optional<std::size_t> best;
  for (std::size_t c = 0; c < s.eigenvalues.size(); ++c) {
    const int nu = static_cast<int>(n) - 1 - s.multiplicities[c];
    if (nu < 1 || nu > 8) continue;
    if (!best || s.multiplicities[c] < s.multiplicities[*best]) best = c;
  }
  if (best) return *best;
  std::size_t lam = 0;
  for (std::size_t c = 1; c < s.eigenvalues.size(); ++c)
    if (s.multiplicities[c] > s.multiplicities[lam]) lam = c;
  return lam;
}

double spectral_scale(const Spectrum& s) {
  double m = 0.0;
  for (double v : s.raw) m = std::max(m, std::abs(v));
  return m;
}

// t0[(y*n + z)*n + w] = <T(x0, e_y) e_z, e_w>.
std::vector<double> slice(std::span<const double> t, std::size_t n, std::span<const double> x0) {
  std::vector<double> out(n * n * n, 0.0);
  const std::size_t n3 = n * n * n;
  for (std::size_t i = 0; i < n; ++i) {
    if (x0[i] == 0.0) continue;
    axpy(x0[i], t.subspan(i * n3, n3), out);
  }
  return out;
}

// Stacked J_kJ_l + J_lJ_k + 2 delta_kl id over k <= l.
Vector anticommutators(std::span<const Matrix> j) {
  Vector out;
  for (std::size_t k = 0; k < j.size(); ++k)
    for (std::size_t l = k; l < j.size(); ++l) {
      Matrix m = j[k] * j[l] + j[l] * j[k];
      if (k == l)
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += 2.0;
      out.insert(out.end(), m.data().begin(), m.data().end());
    }
  return out;
}

// Levenberg-Marquardt on J = base + sum_i t_i dirs[i] for the anticommutation relations.
std::vector<Matrix> resolve_null_space(std::vector<Matrix> base, const std::vector<std::vector<Matrix>>& dirs) {
  const std::size_t nu = base.size();
  const std::size_t d = dirs.size();
  auto at = [&](const Vector& t) {
    std::vector<Matrix> j = base;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < nu; ++k) j[k] += t[i] * dirs[i][k];
    return j;
  };
  Vector t(d, 0.0);
  std::vector<Matrix> j = at(t);
  Vector g = anticommutators(j);
  double f = dot(g, g);
  double mu = 1e-3;
  for (int it = 0; it < 200 && f > 1e-28; ++it) {
    Matrix jac(g.size(), d);
    for (std::size_t i = 0; i < d; ++i) {
      std::size_t row = 0;
      for (std::size_t k = 0; k < nu; ++k)
        for (std::size_t l = k; l < nu; ++l) {
          const Matrix m = dirs[i][k] * j[l] + j[l] * dirs[i][k] + j[k] * dirs[i][l] + dirs[i][l] * j[k];
          for (double v : m.data()) jac(row++, i) = v;
        }
    }
    const Matrix jt = jac.transpose();
    const Vector grad = jt * g;
    bool improved = false;
    for (int tries = 0; tries < 30 && !improved; ++tries) {
      Matrix h = jt * jac;
      for (std::size_t i = 0; i < d; ++i) h(i, i) += mu * (1.0 + h(i, i));
      const Vector step = least_squares(h, scaled(grad, -1.0), 1e-15);
      const Vector tn = add(t, step);
      std::vector<Matrix> jn = at(tn);
      const Vector gn = anticommutators(jn);
      const double fn = dot(gn, gn);
      if (fn < f) {
        t = tn;
        j = std::move(jn);
        g = gn;
        f = fn;
        mu = std::max(mu * 0.3, 1e-12);
        improved = true;
      } else {
        mu *= 10.0;
      }
    }
    if (!improved) break;
  }
  return j;
}

// Stage 1: exact algebraic solve for J given lambda0, eta and u_k = J_k x0.
std::vector<Matrix> algebraic_solve(const CurvatureTensor& r, const CurvatureTensor& rs, std::span<const double> x0,
                                    const SpectralSeed& seed, std::span<const Vector> extra, double tol) {
  const std::size_t n = r.n();
  const std::size_t nu = seed.v.size();
  const std::vector<Vector>& u = seed.v;

  std::vector<double> t(r.data().begin(), r.data().end());
  axpy(-seed.lambda0, rs.data(), t);
  const std::vector<double> t0 = slice(t, n, x0);
  auto T0 = [&](std::size_t y, std::size_t z, std::size_t w) { return t0[(y * n + z) * n + w]; };

  Matrix pv = Matrix::identity(n);
  for (const auto& uk : u) pv -= outer(uk, uk);

  // T0(a, b, .) as a vector.
  auto t0_ab = [&](const Vector& a, const Vector& b) {
    Vector out(n, 0.0);
    for (std::size_t y = 0; y < n; ++y) {
      if (a[y] == 0.0) continue;
      for (std::size_t z = 0; z < n; ++z) {
        const double w = a[y] * b[z];
        if (w == 0.0) continue;
        for (std::size_t l = 0; l < n; ++l) out[l] += w * T0(y, z, l);
      }
    }
    return out;
  };

  std::vector<Matrix> base(nu);
  for (std::size_t k = 0; k < nu; ++k) {
    Matrix m(n, n);
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const double w = u[k][z];
        if (w == 0.0) continue;
        for (std::size_t l = 0; l < n; ++l) m(l, y) += w * T0(y, z, l);
      }
    Matrix jk = (1.0 / seed.eta[k]) * (pv * m * pv);
    for (std::size_t l = 0; l < nu; ++l) {
      Vector a = sub(scaled(t0_ab(u[k], u[l]), 2.0), t0_ab(u[l], u[k]));
      a = pv * scaled(a, 1.0 / (3.0 * seed.eta[k]));
      jk += outer(a, u[l]);
      jk -= outer(u[l], a);
    }
    base[k] = std::move(jk);
  }

  // U -> U block: c_klm = <J_k u_l, u_m>, totally antisymmetric.
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t a = 0; a < nu; ++a)
    for (std::size_t b = a + 1; b < nu; ++b)
      for (std::size_t c = b + 1; c < nu; ++c) triples.push_back({a, b, c});
  if (triples.empty()) return base;

  // Contribution of unit c_abc to J_k: sum over the orderings (k, l, m) of (a, b, c) with their
  // signs of u_m u_l^t.
  struct Perm {
    int s;
    int p[3];
  };
  static constexpr Perm perms[6] = {{1, {0, 1, 2}}, {1, {1, 2, 0}}, {1, {2, 0, 1}},
                                    {-1, {1, 0, 2}}, {-1, {0, 2, 1}}, {-1, {2, 1, 0}}};

  std::vector<Vector> rows;
  Vector rhs;
  for (const auto& x2 : extra) {
    const ReducedEigen e = reduced_eigen(r, x2, tol);
    for (std::size_t k = 0; k < nu; ++k) {
      const double mu = seed.lambda0 + 3.0 * seed.eta[k];
      std::size_t best = 0;
      for (std::size_t c = 1; c < e.spectrum.eigenvalues.size(); ++c)
        if (std::abs(e.spectrum.eigenvalues[c] - mu) < std::abs(e.spectrum.eigenvalues[best] - mu)) best = c;
      const std::vector<Vector> ek = cluster_columns(e, best);
      auto reject = [&](const Vector& v) { return sub(v, project(v, ek)); };

      std::vector<Vector> cols(triples.size());
      for (std::size_t t = 0; t < triples.size(); ++t) {
        Vector col(n, 0.0);
        for (const auto& p : perms) {
          const std::size_t kk = triples[t][static_cast<std::size_t>(p.p[0])];
          if (kk != k) continue;
          const std::size_t l = triples[t][static_cast<std::size_t>(p.p[1])];
          const std::size_t m = triples[t][static_cast<std::size_t>(p.p[2])];
          axpy(p.s * dot(u[l], x2), u[m], col);
        }
        cols[t] = reject(col);
      }
      const Vector b0 = reject(base[k] * x2);
      for (std::size_t q = 0; q < n; ++q) {
        Vector row(triples.size());
        for (std::size_t t = 0; t < triples.size(); ++t) row[t] = cols[t][q];
        rows.push_back(std::move(row));
        rhs.push_back(-b0[q]);
      }
    }
  }
  Matrix a(rows.size(), triples.size());
  for (std::size_t q = 0; q < rows.size(); ++q)
    for (std::size_t t = 0; t < triples.size(); ++t) a(q, t) = rows[q][t];
  const Vector c = least_squares(a, rhs);

  // unit[t][k]: contribution of c_t = 1 to J_k.
  std::vector<std::vector<Matrix>> unit(triples.size(), std::vector<Matrix>(nu, Matrix(n, n)));
  for (std::size_t t = 0; t < triples.size(); ++t)
    for (const auto& p : perms) {
      const std::size_t k = triples[t][static_cast<std::size_t>(p.p[0])];
      const std::size_t l = triples[t][static_cast<std::size_t>(p.p[1])];
      const std::size_t m = triples[t][static_cast<std::size_t>(p.p[2])];
      unit[t][k] += static_cast<double>(p.s) * outer(u[m], u[l]);
    }
  for (std::size_t t = 0; t < triples.size(); ++t)
    for (std::size_t k = 0; k < nu; ++k) base[k] += c[t] * unit[t][k];

  // Eigenspace membership can leave c undetermined (a may vanish outright); pick the point on
  // the null space of a that satisfies the anticommutation relations.
  const EigenDecomposition ne = jacobi_eigen(a.transpose() * a);
  double top = 1.0;
  for (double v : ne.values) top = std::max(top, std::abs(v));
  std::vector<std::vector<Matrix>> dirs;
  for (std::size_t q = 0; q < ne.values.size(); ++q) {
    if (ne.values[q] > 1e-10 * top) continue;
    std::vector<Matrix> d(nu, Matrix(n, n));
    for (std::size_t t = 0; t < triples.size(); ++t) {
      const double w = ne.vectors(t, q);
      if (w == 0.0) continue;
      for (std::size_t k = 0; k < nu; ++k) d[k] += w * unit[t][k];
    }
    dirs.push_back(std::move(d));
  }
  if (dirs.empty()) return base;
  return resolve_null_space(std::move(base), dirs);
}

bool finite(const Matrix& m) {
  for (double v : m.data())
    if (!std::isfinite(v)) return false;
  return true;
}

// Current fit state with cached Clifford terms and residual R_fit - R.
struct State {
  std::vector<Matrix> j;
  double lambda0 = 0.0;
  Vector eta;
  std::vector<CurvatureTensor> cj;
  std::vector<double> resid;
  double f = 0.0;
};

void update_residual(State& s, const CurvatureTensor& r, const CurvatureTensor& rs) {
  s.resid.assign(r.data().begin(), r.data().end());
  for (double& v : s.resid) v = -v;
  axpy(s.lambda0, rs.data(), s.resid);
  for (std::size_t k = 0; k < s.j.size(); ++k) axpy(s.eta[k], s.cj[k].data(), s.resid);
  s.f = dot(s.resid, s.resid);
}

void refresh(State& s, const CurvatureTensor& r, const CurvatureTensor& rs) {
  s.cj.clear();
  for (const auto& j : s.j) s.cj.push_back(clifford_term(j));
  update_residual(s, r, rs);
}

// Linear least squares for (lambda0, eta) with J fixed.
void refit_scalars(State& s, const CurvatureTensor& r, const CurvatureTensor& rs) {
  const std::size_t m = s.j.size() + 1;
  std::vector<std::span<const double>> cols{rs.data()};
  s.cj.clear();
  for (const auto& j : s.j) s.cj.push_back(clifford_term(j));
  for (const auto& c : s.cj) cols.push_back(c.data());
  Matrix g(m, m);
  Vector rhs(m);
  for (std::size_t a = 0; a < m; ++a) {
    rhs[a] = dot(cols[a], r.data());
    for (std::size_t b = a; b < m; ++b) g(a, b) = g(b, a) = dot(cols[a], cols[b]);
  }
  const Vector x = least_squares(g, rhs, 1e-14);
  s.lambda0 = x[0];
  s.eta.assign(x.begin() + 1, x.end());
  update_residual(s, r, rs);
}

struct Step {
  Matrix omega;
  double dl = 0.0;
  Vector de;
};

double step_dot(const Step& a, const Step& b) {
  return op_inner(a.omega, b.omega) + a.dl * b.dl + dot(a.de, b.de);
}

void step_axpy(double alpha, const Step& x, Step& y) {
  y.omega += alpha * x.omega;
  y.dl += alpha * x.dl;
  axpy(alpha, x.de, y.de);
}

// Derivative of the model along (Omega, dl, de), where J_k moves as [Omega, J_k].
std::vector<double> apply_jacobian(const State& s, const CurvatureTensor& rs, const Step& d) {
  const std::size_t n = rs.n();
  std::vector<Matrix> dj;
  dj.reserve(s.j.size());
  for (const auto& j : s.j) dj.push_back(d.omega * j - j * d.omega);
  std::vector<Term> terms;
  for (std::size_t k = 0; k < s.j.size(); ++k) {
    const double e = s.eta[k];
    terms.push_back(Term{TermKind::Wedge, e, &dj[k], &s.j[k]});
    terms.push_back(Term{TermKind::Wedge, e, &s.j[k], &dj[k]});
    terms.push_back(Term{TermKind::Scalar, e, &dj[k], &s.j[k]});
    terms.push_back(Term{TermKind::Scalar, e, &s.j[k], &dj[k]});
  }
  std::vector<double> out(rs.data().begin(), rs.data().end());
  for (double& v : out) v *= d.dl;
  for (std::size_t k = 0; k < s.j.size(); ++k) axpy(d.de[k], s.cj[k].data(), out);
  kernels::assemble(n, terms, out);
  return out;
}

Step apply_adjoint(const State& s, const CurvatureTensor& rs, std::span<const double> w) {
  const std::size_t n = rs.n();
  Step g;
  g.omega = Matrix(n, n);
  g.dl = dot(w, rs.data());
  g.de.resize(s.j.size());
  for (std::size_t k = 0; k < s.j.size(); ++k) {
    g.de[k] = dot(w, s.cj[k].data());
    const Matrix gk = kernels::clifford_gradient(n, w, s.j[k]);
    const Matrix jt = s.j[k].transpose();
    g.omega += s.eta[k] * (gk * jt - jt * gk);
  }
  g.omega = skew_part(g.omega);
  return g;
}

Step zero_step(std::size_t n, std::size_t nu) { return Step{Matrix(n, n), 0.0, Vector(nu, 0.0)}; }

// CGLS for min || A d + resid ||.
Step solve_gn(const State& s, const CurvatureTensor& rs, int iterations) {
  const std::size_t n = rs.n();
  Step x = zero_step(n, s.j.size());
  std::vector<double> res(s.resid.size());
  for (std::size_t t = 0; t < res.size(); ++t) res[t] = -s.resid[t];
  Step g = apply_adjoint(s, rs, res);
  Step p = g;
  double gamma = step_dot(g, g);
  const double gamma0 = gamma;
  if (gamma0 == 0.0) return x;
  for (int it = 0; it < iterations; ++it) {
    const std::vector<double> q = apply_jacobian(s, rs, p);
    const double qq = dot(q, q);
    if (qq <= 0.0) break;
    const double alpha = gamma / qq;
    step_axpy(alpha, p, x);
    axpy(-alpha, q, res);
    g = apply_adjoint(s, rs, res);
    const double gamma_new = step_dot(g, g);
    if (gamma_new <= 1e-24 * gamma0) break;
    const double beta = gamma_new / gamma;
    gamma = gamma_new;
    Step np = g;
    step_axpy(beta, p, np);
    p = std::move(np);
  }
  return x;
}

State moved(const State& s, const Step& d, double alpha, const CurvatureTensor& r, const CurvatureTensor& rs) {
  const std::size_t n = rs.n();
  const Matrix q = polar_factor(Matrix::identity(n) + alpha * d.omega);
  State t;
  t.lambda0 = s.lambda0 + alpha * d.dl;
  t.eta = s.eta;
  axpy(alpha, d.de, t.eta);
  std::vector<Matrix> j;
  for (const auto& jk : s.j) j.push_back(q * jk * q.transpose());
  auto restored = restore_clifford(j);
  t.j = restored ? std::move(*restored) : std::move(j);
  refresh(t, r, rs);
  return t;
}

// Damped Gauss-Newton with Armijo backtracking. Returns the iteration count.
int refine(State& s, const CurvatureTensor& r, const CurvatureTensor& rs, const RecoveryConfig& cfg, double floor) {
  int it = 0;
  for (; it < cfg.max_iterations; ++it) {
    if (s.f <= floor) break;
    const Step d = solve_gn(s, rs, cfg.cg_iterations);
    const std::vector<double> ad = apply_jacobian(s, rs, d);
    const double slope = 2.0 * dot(s.resid, ad);
    if (!(slope < 0.0)) break;
    double alpha = 1.0;
    bool accepted = false;
    for (int bt = 0; bt <= cfg.max_backtracks; ++bt, alpha *= 0.5) {
      State t = moved(s, d, alpha, r, rs);
      if (std::isfinite(t.f) && t.f <= s.f + cfg.armijo * alpha * slope) {
        const double df = s.f - t.f;
        s = std::move(t);
        accepted = true;
        if (std::abs(df) < 1e-14 * s.f) return it + 1;
        break;
      }
    }
    if (!accepted) break;
  }
  return it;
}

Vector unit_from(std::mt19937_64& rng, std::size_t n) { return random_unit(n, rng); }

std::vector<Matrix> fallback_system(std::size_t n, std::size_t nu, std::mt19937_64& rng) {
  if (n != 16) return {};
  const CliffordSystem base = restrict_to(make_rho8(), nu);
  const Matrix q = random_orthogonal(n, rng);
  std::vector<Matrix> j;
  for (const auto& g : base.generators()) j.push_back(q * g * q.transpose());
  return j;
}

double relative(double f, double rnorm) { return rnorm > 0.0 ? std::sqrt(f) / rnorm : std::sqrt(f); }

}  // namespace

SpectralSeed spectral_seed(const CurvatureTensor& r, std::span<const double> x0, double tol) {
  if (x0.size() != r.n()) throw std::invalid_argument("spectral_seed: X0 has wrong dimension");
  const OssermanReport rep = osserman_check(r, kDefaultSamples, tol, 0);
  if (!rep.is_osserman) throw std::domain_error("spectral_seed: tensor is not Osserman");
  const Vector x = normalized(x0);
  const ReducedEigen e = reduced_eigen(r, x, tol);
  if (e.spectrum.eigenvalues.size() < 2) throw std::domain_error("spectral_seed: nothing to seed (single eigenvalue)");
  return seed_with(e, lambda0_cluster(e.spectrum, r.n()));
}

CurvatureTensor clifford_model(std::span<const Matrix> j, double lambda0, std::span<const double> eta) {
  if (j.empty()) throw std::invalid_argument("clifford_model: need at least one generator");
  if (eta.size() != j.size()) throw std::invalid_argument("clifford_model: eta count must match");
  const std::size_t n = j.front().rows();
  const Matrix id = Matrix::identity(n);
  std::vector<Term> terms{Term{TermKind::Wedge, lambda0, &id, &id}};
  for (std::size_t k = 0; k < j.size(); ++k) {
    terms.push_back(Term{TermKind::Wedge, eta[k], &j[k], &j[k]});
    terms.push_back(Term{TermKind::Scalar, eta[k], &j[k], &j[k]});
  }
  CurvatureTensor r(n);
  kernels::assemble(n, terms, r.data());
  return r;
}

std::optional<std::vector<Matrix>> restore_clifford(std::vector<Matrix> j) {
  if (j.empty()) return j;
  const std::size_t n = j.front().rows();
  const std::size_t nu = j.size();
  for (auto& jk : j) {
    jk = skew_part(jk);
    if (frobenius_norm(jk) == 0.0) return std::nullopt;
    try {
      jk = polar_factor(jk);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (!finite(jk)) return std::nullopt;
    jk = skew_part(jk);
  }

  Matrix gram(nu, nu);
  for (std::size_t a = 0; a < nu; ++a)
    for (std::size_t b = a; b < nu; ++b) gram(a, b) = gram(b, a) = op_inner(j[a], j[b]) / static_cast<double>(n);
  Matrix w;
  try {
    w = inverse_sqrt_spd(gram);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  std::vector<Matrix> lj(nu, Matrix(n, n));
  for (std::size_t a = 0; a < nu; ++a)
    for (std::size_t b = 0; b < nu; ++b) lj[a] += w(a, b) * j[b];
  j = std::move(lj);

  for (std::size_t k = 0; k < nu; ++k) {
    for (std::size_t a = 0; a < k; ++a) j[k] = 0.5 * (j[k] + j[a] * j[k] * j[a]);
    j[k] = skew_part(j[k]);
    if (!(frobenius_norm(j[k]) > 1e-8 * std::sqrt(static_cast<double>(n)))) return std::nullopt;
    try {
      j[k] = skew_part(polar_factor(j[k]));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  for (const auto& jk : j)
    if (!finite(jk)) return std::nullopt;
  return j;
}

CliffordFit reconstruct(const CurvatureTensor& r, const RecoveryConfig& cfg) {
  cfg.validate();
  const std::size_t n = r.n();
  const auto nu = static_cast<std::size_t>(cfg.nu);
  const CurvatureTensor rs = constant_curvature(n, 1.0);
  const double rnorm = std::sqrt(norm_sq(r));

  CliffordFit fit;
  fit.restarts = cfg.restarts;
  fit.verdict = {StructureKind::Unknown, 0};

  auto trivial_system = [&]() {
    if (n == 16) return restrict_to(make_rho8(), nu);
    return CliffordSystem::unchecked(n, {});
  };

  if (rnorm == 0.0) {
    fit.system = trivial_system();
    fit.eta.assign(nu, 0.0);
    fit.residual = fit.stage1_residual = 0.0;
    fit.eta_zero_rejected = true;
    fit.verdict = {StructureKind::Flat, 0};
    fit.note = "zero tensor";
    return fit;
  }

  std::mt19937_64 rng(cfg.seed);
  const double floor = std::pow(1e-15 * rnorm, 2.0);
  bool any_candidate = false;
  bool single_cluster = false;
  double single_value = 0.0;
  State best;
  double best_residual = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    const Vector x0 = unit_from(rng, n);
    std::vector<Vector> extra;
    for (int e = 0; e < cfg.extra_directions; ++e) extra.push_back(unit_from(rng, n));

    const ReducedEigen e0 = reduced_eigen(r, x0, cfg.spectral_tolerance);
    if (e0.spectrum.eigenvalues.size() == 1) {
      single_cluster = true;
      single_value = e0.spectrum.eigenvalues.front();
      break;
    }
    const double scale = spectral_scale(e0.spectrum);

    State restart_best;
    double restart_f = std::numeric_limits<double>::infinity();
    double restart_stage1 = 1.0;
    for (std::size_t c = 0; c < e0.spectrum.eigenvalues.size(); ++c) {
      if (e0.spectrum.multiplicities[c] != static_cast<int>(n) - 1 - cfg.nu) continue;
      const SpectralSeed seed = seed_with(e0, c);
      if (seed.v.size() != nu) continue;
      bool degenerate = false;
      for (double v : seed.eta)
        if (std::abs(v) <= 1e-12 * scale) degenerate = true;
      if (degenerate) continue;
      any_candidate = true;

      State s;
      std::vector<Matrix> j = algebraic_solve(r, rs, x0, seed, extra, cfg.spectral_tolerance);
      auto restored = restore_clifford(j);
      if (!restored || defects(n, *restored).max() > cfg.constraint_tolerance) {
        std::vector<Matrix> fb = fallback_system(n, nu, rng);
        if (fb.empty()) continue;
        restored = std::move(fb);
      }
      s.j = std::move(*restored);
      s.lambda0 = seed.lambda0;
      s.eta = seed.eta;
      refit_scalars(s, r, rs);
      if (s.f < restart_f) {
        restart_f = s.f;
        restart_stage1 = relative(s.f, rnorm);
        restart_best = std::move(s);
      }
    }
    if (restart_best.j.empty()) continue;

    const int iters = refine(restart_best, r, rs, cfg, floor);
    const double res = relative(restart_best.f, rnorm);
    if (res < best_residual) {
      best_residual = res;
      best = std::move(restart_best);
      fit.iterations = iters;
      fit.best_restart = restart;
      fit.stage1_residual = restart_stage1;
    }
  }

  if (single_cluster) {
    fit.system = trivial_system();
    fit.lambda0 = single_value;
    fit.eta.assign(nu, 0.0);
    const CurvatureTensor model = constant_curvature(n, single_value);
    fit.residual = fit.stage1_residual = std::sqrt(norm_sq(r - model)) / rnorm;
    fit.eta_zero_rejected = true;
    fit.best_restart = 0;
    fit.note = "single reduced eigenvalue; every eta vanishes";
    if (fit.residual <= cfg.fit_tolerance) fit.verdict = {StructureKind::ConstantCurvature, 0};
    return fit;
  }

  if (!any_candidate || best.j.empty()) {
    fit.feasible = false;
    fit.system = trivial_system();
    fit.eta.assign(nu, 0.0);
    const double l0 = dot(r.data(), rs.data()) / norm_sq(rs);
    fit.lambda0 = l0;
    fit.residual = fit.stage1_residual = std::sqrt(norm_sq(r - constant_curvature(n, l0))) / rnorm;
    fit.note = "no reduced eigenvalue of multiplicity n-1-nu";
    return fit;
  }

  fit.system = CliffordSystem::unchecked(n, best.j);
  fit.lambda0 = best.lambda0;
  fit.eta = best.eta;
  fit.residual = best_residual;
  fit.constraint_violation = defects(n, best.j).max();
  double scale = std::abs(best.lambda0);
  for (double v : best.eta) scale = std::max(scale, std::abs(v));
  for (double v : best.eta)
    if (std::abs(v) <= 1e-6 * scale) fit.eta_zero_rejected = true;
  fit.success = fit.residual <= cfg.fit_tolerance && fit.constraint_violation <= cfg.constraint_tolerance &&
                !fit.eta_zero_rejected;
  if (fit.success)
    fit.verdict = {StructureKind::CliffordCompatible, cfg.nu};
  else if (fit.eta_zero_rejected && fit.residual <= cfg.fit_tolerance)
    fit.verdict = {StructureKind::ConstantCurvature, 0};
  return fit;
}

CayleyFit fit_cayley(const CurvatureTensor& r) {
  CayleyFit fit;
  if (r.n() != 16) return fit;
  fit.available = true;
  const CurvatureTensor ro = cayley_tensor();
  const CurvatureTensor rs = constant_curvature(16, 1.0);
  Matrix g(2, 2);
  g(0, 0) = norm_sq(ro);
  g(1, 1) = norm_sq(rs);
  g(0, 1) = g(1, 0) = dot(ro.data(), rs.data());
  const Vector rhs{dot(ro.data(), r.data()), dot(rs.data(), r.data())};
  const Vector x = least_squares(g, rhs, 1e-14);
  fit.a = x[0];
  fit.b = x[1];
  CurvatureTensor model = fit.a * ro;
  model += fit.b * rs;
  const double rnorm = std::sqrt(norm_sq(r));
  const double diff = std::sqrt(norm_sq(r - model));
  fit.residual = rnorm > 0.0 ? diff / rnorm : diff;
  return fit;
}

ProbeReport conjecture_a_probe(const CurvatureTensor& r, const ProbeConfig& config) {
  ProbeReport rep;
  rep.osserman = osserman_check(r, config.samples, config.spectral_tolerance, config.seed);
  rep.cayley = fit_cayley(r);
  const StructureClass& sc = rep.osserman.structure;
  switch (sc.primary.kind) {
    case StructureKind::Flat: rep.verdict = "Flat"; return rep;
    case StructureKind::NotOsserman: rep.verdict = "NotOsserman"; return rep;
    case StructureKind::ConstantCurvature: rep.verdict = "ConstantCurvature"; return rep;
    default: break;
  }
  for (const auto& l : sc.labels) {
    if (l.kind != StructureKind::CliffordCompatible) continue;
    RecoveryConfig rc;
    rc.nu = l.nu;
    rc.restarts = config.restarts;
    rc.seed = config.seed;
    rc.fit_tolerance = config.fit_tolerance;
    rc.spectral_tolerance = config.spectral_tolerance;
    rep.fits.push_back(reconstruct(r, rc));
  }
  if (rep.cayley.available && rep.cayley.residual <= config.cayley_tolerance && rep.cayley.a != 0.0) {
    rep.verdict = "Cayley";
    return rep;
  }
  const CliffordFit* best = nullptr;
  for (const auto& f : rep.fits)
    if (f.success && (!best || f.residual < best->residual)) best = &f;
  rep.verdict = best ? "Clifford(" + std::to_string(best->system.nu()) + ")" : "Unresolved";
  return rep;
}

}  // namespace curvlab
