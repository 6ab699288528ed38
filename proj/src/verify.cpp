#include "curvlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "curvlab/clifford.hpp"
#include "curvlab/curvature.hpp"
#include "curvlab/octonion.hpp"
#include "curvlab/osserman.hpp"
#include "curvlab/spin9.hpp"

namespace curvlab {

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"octonion", "clifford", "spin9", "curvature"};
  return names;
}

namespace {

Check at_most(std::string name, std::string anchor, double measured, double tol) {
  return Check{std::move(name), std::move(anchor), measured, 0.0, tol, measured <= tol};
}

Check at_least(std::string name, std::string anchor, double measured, double bound) {
  return Check{std::move(name), std::move(anchor), measured, json{{">=", bound}}, bound, measured >= bound};
}

Check equals(std::string name, std::string anchor, const json& measured, const json& expected) {
  return Check{std::move(name), std::move(anchor), measured, expected, 0.0, measured == expected};
}

template <typename S>
double abs_oct(const BasicOctonion<S>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < 8; ++i) s += std::norm(a[i]);
  return std::sqrt(s);
}

template <typename S>
double coeff_scale(const BasicOctonion<S>& a) {
  return abs_oct(a);
}

Octonion random_oct(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Octonion a;
  for (std::size_t i = 0; i < 8; ++i) a[i] = g(rng);
  return a;
}

Bioctonion random_bioct(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Bioctonion a;
  for (std::size_t i = 0; i < 8; ++i) a[i] = {g(rng), g(rng)};
  return a;
}

// Quaternion-pair doubling, independent of the stored table.
std::array<double, 8> doubled_product(const std::array<double, 8>& x, const std::array<double, 8>& y) {
  using Q = std::array<double, 4>;
  auto qmul = [](const Q& p, const Q& q) {
    return Q{p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3], p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
             p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1], p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
  };
  auto qconj = [](const Q& p) { return Q{p[0], -p[1], -p[2], -p[3]}; };
  const Q a{x[0], x[1], x[2], x[3]}, b{x[4], x[5], x[6], x[7]};
  const Q c{y[0], y[1], y[2], y[3]}, d{y[4], y[5], y[6], y[7]};
  const Q ac = qmul(a, c), dsb = qmul(qconj(d), b), da = qmul(d, a), bcs = qmul(b, qconj(c));
  return {ac[0] - dsb[0], ac[1] - dsb[1], ac[2] - dsb[2], ac[3] - dsb[3],
          da[0] + bcs[0], da[1] + bcs[1], da[2] + bcs[2], da[3] + bcs[3]};
}

SuiteReport octonion_suite(const VerifyOptions& o) {
  SuiteReport rep{"octonion", {}};
  std::mt19937_64 rng(o.seed);
  constexpr double rel = 1e-12;

  double comp = 0, conjform = 0, conjprod = 0, alt = 0, moufang = 0, inner3 = 0, inner_mul = 0, inv = 0;
  for (int d = 0; d < o.draws; ++d) {
    const Octonion a = random_oct(rng), b = random_oct(rng), c = random_oct(rng);
    const double na = norm_sq(a), nb = norm_sq(b), nc = norm_sq(c);
    comp = std::max(comp, std::abs(norm_sq(a * b) - na * nb) / std::max(1.0, na * nb));

    Octonion cf = -a;
    cf += Octonion::real(2.0 * inner(a, Octonion::unit()));
    conjform = std::max(conjform, abs_oct(conj(a) - cf) / std::max(1.0, std::sqrt(na)));
    conjprod = std::max(conjprod, abs_oct(conj(a * b) - conj(b) * conj(a)) / std::max(1.0, std::sqrt(na * nb)));

    const double s_ab = std::max(1.0, na * std::sqrt(nb));
    alt = std::max(alt, abs_oct(a * (a * b) - (a * a) * b) / s_ab);
    alt = std::max(alt, abs_oct((b * a) * a - b * (a * a)) / s_ab);

    const double s3 = std::max(1.0, std::sqrt(na * nb * nc));
    moufang = std::max(moufang, abs_oct((a * conj(b)) * c + (a * conj(c)) * b - 2.0 * inner(b, c) * a) / s3);
    const double i1 = inner(a, b * c), i2 = inner(conj(b) * a, c), i3 = inner(a * conj(c), b);
    inner3 = std::max(inner3, std::max(std::abs(i1 - i2), std::abs(i1 - i3)) / s3);
    const double s4 = std::max(1.0, na * std::sqrt(nb * nc));
    const double m1 = inner(a * b, a * c), m2 = inner(b * a, c * a), m3 = na * inner(b, c);
    inner_mul = std::max(inner_mul, std::max(std::abs(m1 - m3), std::abs(m2 - m3)) / s4);
    inv = std::max(inv, abs_oct(a * inverse(a) - Octonion::unit()));
  }
  const std::string draws = std::to_string(o.draws);
  rep.checks.push_back(at_most("composition (" + draws + " draws)", "|ab|^2 = |a|^2 |b|^2", comp, rel));
  rep.checks.push_back(at_most("conjugation formula", "a* = 2<a,1>1 - a", conjform, rel));
  rep.checks.push_back(at_most("conjugate of product", "(ab)* = b* a*", conjprod, rel));
  rep.checks.push_back(at_most("alternativity", "a(ab) = (aa)b, (ba)a = b(aa)", alt, rel));
  rep.checks.push_back(at_most("Moufang-type identity", "(ab*)c + (ac*)b = 2<b,c>a", moufang, rel));
  rep.checks.push_back(at_most("inner product transfer", "<a,bc> = <b*a,c> = <ac*,b>", inner3, rel));
  rep.checks.push_back(at_most("multiplication isometry", "<ab,ac> = <ba,ca> = |a|^2<b,c>", inner_mul, rel));
  rep.checks.push_back(at_most("inverse", "a a^{-1} = 1, a^{-1} = |a|^{-2} a*", inv, rel));

  int nonassoc = 0;
  for (std::size_t i = 1; i < 8; ++i)
    for (std::size_t j = 1; j < 8; ++j)
      for (std::size_t k = 1; k < 8; ++k) {
        const Octonion ei = Octonion::basis(i), ej = Octonion::basis(j), ek = Octonion::basis(k);
        if (!((ei * ej) * ek == ei * (ej * ek))) ++nonassoc;
      }
  rep.checks.push_back(at_least("non-associative basis triples", "(e_i e_j)e_k != e_i(e_j e_k) for some i,j,k",
                                nonassoc, 1));

  double table = 0.0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      std::array<double, 8> x{}, y{};
      x[i] = 1.0;
      y[j] = 1.0;
      const auto oracle = doubled_product(x, y);
      const Octonion p = Octonion::basis(i) * Octonion::basis(j);
      for (std::size_t k = 0; k < 8; ++k) table = std::max(table, std::abs(oracle[k] - p[k]));
    }
  rep.checks.push_back(at_most("table matches quaternion doubling", "(a,b)(c,d) = (ac - d*b, da + bc*)", table, 0.0));

  using C = std::complex<double>;
  const C i1(0.0, 1.0);
  Bioctonion zl = Bioctonion::real(i1), zr = Bioctonion::real(i1);
  zl[1] = 1.0;
  zr[1] = -1.0;
  rep.checks.push_back(at_most("bioctonion zero divisor", "(i1 + e1)(i1 - e1) = 0", abs_oct(zl * zr), 1e-14));

  double bi = 0.0;
  const int bdraws = std::max(1, o.draws / 10);
  for (int d = 0; d < bdraws; ++d) {
    const Bioctonion a = random_bioct(rng), b = random_bioct(rng), c = random_bioct(rng);
    const double s3 = std::max(1.0, abs_oct(a) * abs_oct(b) * abs_oct(c));
    bi = std::max(bi, abs_oct((a * conj(b)) * c + (a * conj(c)) * b - C(2.0) * inner(b, c) * a) / s3);
    const double s2 = std::max(1.0, std::pow(abs_oct(a), 2) * abs_oct(b) * abs_oct(c));
    bi = std::max(bi, std::abs(inner(a * b, a * c) - norm_sq(a) * inner(b, c)) / s2);
    bi = std::max(bi, std::abs(norm_sq(a * b) - norm_sq(a) * norm_sq(b)) / s2 * abs_oct(c) / std::max(1.0, abs_oct(c)));
    bi = std::max(bi, abs_oct(a * (a * b) - (a * a) * b) / std::max(1.0, std::pow(abs_oct(a), 2) * abs_oct(b)));
  }
  rep.checks.push_back(at_most("bioctonion identities (complex-bilinear)", "polynomial identities hold over C", bi, rel));

  double lmul = 0.0;
  for (int d = 0; d < 100; ++d) {
    const Octonion a = random_oct(rng);
    Matrix l = left_mul_op(a);
    l *= 1.0 / std::sqrt(norm_sq(a));
    lmul = std::max(lmul, orthogonality_defect(l));
    lmul = std::max(lmul, max_abs_diff(left_mul_op(a).transpose(), left_mul_op(conj(a))));
  }
  rep.checks.push_back(at_most("left multiplication is a similarity", "L_a^t L_a = |a|^2 id, L_a^t = L_{a*}", lmul, o.tol));
  return rep;
}

SuiteReport clifford_suite(const VerifyOptions& o) {
  SuiteReport rep{"clifford", {}};
  std::mt19937_64 rng(o.seed + 1);
  const CliffordSystem r8 = make_rho8();
  const CliffordSystem r7 = make_rho7();
  rep.checks.push_back(at_most("rho8 relations", "J_iJ_j + J_jJ_i = -2 delta_ij id", validate(r8).max(), o.tol));
  rep.checks.push_back(at_most("rho7 relations", "J_iJ_j + J_jJ_i = -2 delta_ij id", validate(r7).max(), o.tol));

  double restr = 0.0;
  for (std::size_t k = 0; k <= 8; ++k) restr = std::max(restr, validate(restrict_to(r8, k)).max());
  rep.checks.push_back(at_most("restrictions of rho8", "J_iJ_j + J_jJ_i = -2 delta_ij id", restr, o.tol));

  const ReprFingerprint f7 = fingerprint(r7, o.tol);
  const double d7 = std::min(f7.product_distance_plus, f7.product_distance_minus);
  rep.checks.push_back(at_most("rho7 product is +-id", "prod_{i=1}^7 J_i = +-id", d7, o.tol));
  rep.checks.push_back(equals("rho7 product sign", "prod_{i=1}^7 J_i = +-id", f7.product_label(), "+id"));

  const ReprFingerprint f87 = fingerprint(restrict_to(r8, 7), o.tol);
  rep.checks.push_back(at_least("restricted rho8 product away from +-id", "|prod J_i -+ id| >= 1",
                                std::min(f87.product_distance_plus, f87.product_distance_minus), 1.0));
  rep.checks.push_back(equals("parity rule rho8", "products skew iff m = 1, 2 (mod 4)",
                              fingerprint(r8, o.tol).parity_matches_rule(), true));
  rep.checks.push_back(equals("parity rule rho7", "products skew iff m = 1, 2 (mod 4)", f7.parity_matches_rule(), true));

  double orth = 0.0, ortho_set = 0.0;
  std::normal_distribution<double> g;
  for (int d = 0; d < 100; ++d) {
    Vector u(8), x(16);
    for (double& v : u) v = g(rng);
    for (double& v : x) v = g(rng);
    orth = std::max(orth, std::abs(norm(j_u(r8, u, x)) - norm(u) * norm(x)) / std::max(1.0, norm(u) * norm(x)));
    const Vector xu = normalized(x);
    std::vector<Vector> set{xu};
    for (const auto& j : r8.generators()) set.push_back(j * xu);
    for (std::size_t a = 0; a < set.size(); ++a)
      for (std::size_t b = 0; b < set.size(); ++b)
        ortho_set = std::max(ortho_set, std::abs(dot(set[a], set[b]) - (a == b ? 1.0 : 0.0)));
  }
  rep.checks.push_back(at_most("orthogonal multiplication", "|J_u X| = |u| |X|", orth, o.tol));
  rep.checks.push_back(at_most("X, J_iX orthonormal", "<J_iX, J_jX> = delta_ij |X|^2", ortho_set, o.tol));
  return rep;
}

SuiteReport spin9_suite(const VerifyOptions& o) {
  SuiteReport rep{"spin9", {}};
  std::mt19937_64 rng(o.seed + 2);
  std::normal_distribution<double> g;
  const Spin9System sys = make_spin9();
  const Spin9Defects d = validate(sys);
  rep.checks.push_back(at_most("anticommutation (81 pairs)", "S_iS_j + S_jS_i = 2 delta_ij id", d.anticommute, o.tol));
  rep.checks.push_back(at_most("symmetric and orthogonal", "S_i = S_i^t, S_i^2 = id", std::max(d.symmetric, d.orthogonal), o.tol));
  rep.checks.push_back(at_most("traceless", "Tr S_i = 0", d.trace, o.tol));
  const int sign = product_sign(sys, o.tol);
  rep.checks.push_back(Check{"product of all S_i", "prod S_i = +-id", sign, json::array({-1, 1}), o.tol, sign != 0});

  // A on End(R^16), 256 x 256.
  const Spectrum a_spec = sym_eig(a_op_matrix(sys), 1e-7);
  double eig_err = 0.0;
  json measured = json::array();
  for (std::size_t c = 0; c < a_spec.eigenvalues.size(); ++c) {
    const double v = a_spec.eigenvalues[c];
    measured.push_back({{"value", v}, {"multiplicity", a_spec.multiplicities[c]}});
  }
  const std::vector<std::pair<double, int>> expected{{-7, 9}, {-3, 84}, {1, 126}, {5, 36}, {9, 1}};
  bool pattern_ok = a_spec.eigenvalues.size() == expected.size();
  for (std::size_t k = 0; k < a_spec.raw.size(); ++k) {
    double nearest = 1e300;
    for (const auto& e : expected) nearest = std::min(nearest, std::abs(a_spec.raw[k] - e.first));
    eig_err = std::max(eig_err, nearest);
  }
  if (pattern_ok)
    for (std::size_t c = 0; c < expected.size(); ++c)
      pattern_ok = pattern_ok && std::abs(a_spec.eigenvalues[c] - expected[c].first) <= 1e-8 &&
                   a_spec.multiplicities[c] == expected[c].second;
  json exp = json::array();
  for (const auto& e : expected) exp.push_back({{"value", e.first}, {"multiplicity", e.second}});
  rep.checks.push_back(Check{"eigenvalues of A on End(R^16)", "AQ = sum S_iQS_i has eigenvalues (-1)^k (9-2k)", measured,
                             exp, 1e-8, pattern_ok && eig_err <= 1e-8});

  const LkDecomposition lk = lk_decomposition(sys);
  std::vector<const Matrix*> all;
  for (const auto& b : lk.bases)
    for (const auto& m : b) all.push_back(&m);
  double orthn = 0.0;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a; b < all.size(); ++b)
      orthn = std::max(orthn, std::abs(op_inner(*all[a], *all[b]) - (a == b ? 1.0 : 0.0)));
  rep.checks.push_back(at_most("L_k bases orthonormal", "(1/4) S_{i1}...S_{ik} orthonormal", orthn, o.tol));
  const auto lk_dims = lk.dims();
  std::vector<std::size_t> dims(lk_dims.begin(), lk_dims.end());
  rep.checks.push_back(equals("dim L_k", "dim L_k = C(9,k)", dims, std::vector<std::size_t>{1, 9, 36, 84, 126}));
  double parity = 0.0, eigen_lk = 0.0;
  for (std::size_t k = 0; k < 5; ++k) {
    const bool sym = k == 0 || k == 1 || k == 4;
    const double lambda = (k % 2 == 0 ? 1.0 : -1.0) * (9.0 - 2.0 * static_cast<double>(k));
    for (const auto& m : lk.bases[k]) {
      parity = std::max(parity, sym ? symmetry_defect(m) : skew_defect(m));
      eigen_lk = std::max(eigen_lk, max_abs_diff(a_op(sys, m), lambda * m));
    }
  }
  rep.checks.push_back(at_most("parity of L_k", "Sym = L0+L1+L4, Skew = L2+L3", parity, o.tol));
  rep.checks.push_back(at_most("A acts on L_k by (-1)^k (9-2k)", "A|L_k = (-1)^k (9-2k)", eigen_lk, 1e-9));

  const std::string draws = std::to_string(o.spin9_draws);
  double selfadj = 0.0, comm = 0.0, wedge_id = 0.0, sum1 = 0.0, sum2 = 0.0, span_x = 0.0, wres = 0.0, proj = 0.0,
         nconv = 0.0, l23 = 0.0;
  for (int dd = 0; dd < o.spin9_draws; ++dd) {
    Matrix q(16, 16), q2(16, 16);
    for (double& v : q.data()) v = g(rng);
    for (double& v : q2.data()) v = g(rng);
    Vector w(9), x(16), y(16), qv(16);
    for (double& v : w) v = g(rng);
    for (double& v : x) v = g(rng);
    for (double& v : y) v = g(rng);
    for (double& v : qv) v = g(rng);
    const double sq = std::max(1.0, frobenius_norm(q));
    const Matrix aq = a_op(sys, q);

    selfadj = std::max(selfadj, std::abs(op_inner(aq, q2) - op_inner(q, a_op(sys, q2))) / (sq * std::max(1.0, frobenius_norm(q2))));

    const Matrix sw = s_w(sys, w);
    const double sc = sq * std::max(1.0, norm(w));
    comm = std::max(comm, max_abs_diff(a_op(sys, q * sw), -1.0 * (aq * sw) + 2.0 * (sw * q)) / sc);
    comm = std::max(comm, max_abs_diff(a_op(sys, sw * q), -1.0 * (sw * aq) + 2.0 * (q * sw)) / sc);

    Matrix rhs(16, 16);
    for (std::size_t i = 0; i < 9; ++i) rhs += wedge(sys[i] * x, sys[i] * y);
    const double sxy = std::max(1.0, norm(x) * norm(y));
    wedge_id = std::max(wedge_id, max_abs_diff(a_op(sys, wedge(x, y)), rhs) / sxy);

    Vector s1(16, 0.0), s2(16, 0.0);
    std::vector<Vector> sx;
    for (std::size_t i = 0; i < 9; ++i) {
      const Vector six = sys[i] * x;
      sx.push_back(six);
      axpy(dot(six, x), six, s1);
      axpy(2.0 * dot(six, y), six, s2);
      axpy(dot(six, x), sys[i] * y, s2);
    }
    const double xx = dot(x, x);
    sum1 = std::max(sum1, max_abs_diff(s1, scaled(x, xx)) / std::max(1.0, xx * norm(x)));
    const Vector t2 = add(scaled(y, xx), scaled(x, 2.0 * dot(x, y)));
    sum2 = std::max(sum2, max_abs_diff(s2, t2) / std::max(1.0, xx * norm(y)));
    const std::vector<Vector> basis = orthonormalize(sx);
    span_x = std::max(span_x, norm(sub(x, project(x, basis))) / std::max(1.0, norm(x)));

    const Vector wx = w_for_x(x);
    wres = std::max(wres, std::max(norm(sub(s_w(sys, wx) * x, x)) / norm(x), std::abs(norm(wx) - 1.0)));

    const Matrix p = eig_proj(sys, w);
    proj = std::max(proj, std::max(max_abs_diff(p * p, p), std::abs(p.trace() - 8.0)));

    // Converse vanishing: X, Y, Z in E_{|w|}(S_w).
    Vector cx(16), cy(16), cz(16);
    for (double& v : cx) v = g(rng);
    for (double& v : cy) v = g(rng);
    for (double& v : cz) v = g(rng);
    const Vector ex = p * cx, ey = p * cy, ez = p * cz;
    const double sn = std::max(1.0, norm(qv) * norm(ex) * norm(ey) * norm(ez));
    nconv = std::max(nconv, std::abs(dot(n_from_q(sys, qv, ex, ey), ez)) / sn);

    const Matrix k = skew_part(q);
    l23 = std::max(l23, max_abs_diff(proj_l2(sys, k) + proj_l3(sys, k), k) / sq);
  }
  rep.checks.push_back(at_most("A self-adjoint (" + draws + " draws)", "<AQ1,Q2> = <Q1,AQ2>", selfadj, 1e-9));
  rep.checks.push_back(at_most("commutator identities", "A(QS_w) = -A(Q)S_w + 2S_wQ, A(S_wQ) = -S_wA(Q) + 2QS_w", comm,
                               o.tol));
  rep.checks.push_back(at_most("A on wedges", "A(X ^ Y) = sum S_iX ^ S_iY", wedge_id, o.tol));
  rep.checks.push_back(at_most("first sum identity", "sum <S_iX,X> S_iX = |X|^2 X", sum1, o.tol));
  rep.checks.push_back(
      at_most("second sum identity", "sum (2<S_iX,Y>S_iX + <S_iX,X>S_iY) = |X|^2 Y + 2<X,Y>X", sum2, o.tol));
  rep.checks.push_back(at_most("X in span S_iX", "X in Span(S_iX)", span_x, o.tol));
  rep.checks.push_back(at_most("unit w with S_w X = X", "w = |X|^{-2}((|x1|^2 - |x2|^2)e0 + 2 x1x2)", wres, o.tol));
  rep.checks.push_back(at_most("eigenspace projector", "pi = (|w|^{-1}S_w + id)/2, rank 8", proj, o.tol));
  rep.checks.push_back(at_most("N vanishes on an eigenspace", "<(A - id)(X ^ Y)q, Z> = 0 on E(S_w)", nconv, o.tol));
  rep.checks.push_back(at_most("pi_2 + pi_3 = id on Skew", "pi_2 = (A+3)/8, pi_3 = -(A-5)/8", l23, o.tol));
  return rep;
}

SuiteReport curvature_suite(const VerifyOptions& o) {
  SuiteReport rep{"curvature", {}};
  std::mt19937_64 rng(o.seed + 3);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);

  double sym = 0.0;
  const CurvatureTensor ro = cayley_tensor();
  sym = std::max(sym, validate_symmetries(ro).max());
  sym = std::max(sym, validate_symmetries(constant_curvature(16, 1.0)).max());
  sym = std::max(sym, validate_symmetries(clifford_tensor(CliffordSpec(make_rho7(), 1.0, Vector(7, 0.5)))).max());
  sym = std::max(sym, validate_symmetries(weyl_cayley(1.0, 1)).max());
  rep.checks.push_back(at_most("curvature symmetries and Bianchi", "R_ijkl = -R_jikl = R_klij, cyclic sum 0", sym, o.tol));

  // Clifford spectra against lambda0 + 3 eta_i.
  double remark = 0.0;
  for (int s = 0; s < 20; ++s) {
    const bool use7 = s % 2 == 1;
    const CliffordSystem base = use7 ? make_rho7() : make_rho8();
    const std::size_t nu = 1 + static_cast<std::size_t>(rng() % base.nu());
    const double l0 = unif(rng);
    Vector eta(nu);
    for (double& e : eta) {
      do e = unif(rng);
      while (std::abs(e) < 0.1);
    }
    const CurvatureTensor r = clifford_tensor(CliffordSpec(restrict_to(base, nu), l0, eta));
    Vector expected(15 - nu, l0);
    for (double e : eta) expected.push_back(l0 + 3.0 * e);
    std::sort(expected.begin(), expected.end());
    for (int d = 0; d < 100; ++d) {
      const Vector x = random_unit(16, rng);
      const Matrix b = complement_basis(x);
      const Vector ev = jacobi_eigen(sym_part(b.transpose() * jacobi(r, x) * b)).values;
      for (std::size_t k = 0; k < ev.size(); ++k) remark = std::max(remark, std::abs(ev[k] - expected[k]));
    }
  }
  rep.checks.push_back(at_most("Clifford Jacobi spectra (20 specs x 100 directions)",
                               "eigenvalues 0, lambda0 (x n-1-nu), lambda0 + 3 eta_i", remark, 1e-9));

  double cay = 0.0;
  for (int d = 0; d < 100; ++d) {
    const Vector x = random_unit(16, rng);
    const Matrix b = complement_basis(x);
    const Vector ev = jacobi_eigen(sym_part(b.transpose() * jacobi(ro, x) * b)).values;
    for (std::size_t k = 0; k < ev.size(); ++k) cay = std::max(cay, std::abs(ev[k] - (k < 8 ? 1.0 : 4.0)));
  }
  rep.checks.push_back(at_most("Cayley Jacobi spectrum", "R^O_X = 1 (x8), 4 (x7) on X^perp", cay, 1e-9));

  double ric = 0.0, scal_err = 0.0;
  for (int s = 0; s < 20; ++s) {
    const Matrix rho = random_symmetric(16, rng);
    const int eps = s % 2 == 0 ? 1 : -1;
    const double f = unif(rng);
    const CurvatureTensor r = cayley_with_rho(rho, eps, f);
    Matrix expected = 14.0 * rho;
    const double shift = rho.trace() - 9.0 * eps * f;
    for (std::size_t i = 0; i < 16; ++i) expected(i, i) += shift;
    ric = std::max(ric, max_abs_diff(ricci(r), expected) / std::max(1.0, max_abs(expected)));
    const double sc = 30.0 * rho.trace() - 144.0 * eps * f;
    scal_err = std::max(scal_err, std::abs(scalar(r) - sc) / std::max(1.0, std::abs(sc)));
  }
  rep.checks.push_back(at_most("Ricci closed form", "Ric X = 14 rho X + (Tr rho - 9f) X", ric, 1e-9));
  rep.checks.push_back(at_most("scalar curvature closed form", "scal = 30 Tr rho - 144 f", scal_err, 1e-9));

  const double f = 1.7;
  const double wn = norm_sq(weyl_cayley(f, -1)) / (f * f);
  rep.checks.push_back(Check{"Weyl norm constant", "|W|^2 = 32256/5 f^2", wn, 32256.0 / 5.0, 1e-9,
                             std::abs(wn - 32256.0 / 5.0) <= 1e-9 * 32256.0 / 5.0});

  const CurvatureTensor w = weyl(ro);
  double tr = 0.0;
  for (std::size_t k = 0; k < 16; ++k)
    for (std::size_t l = 0; l < 16; ++l) {
      double s = 0.0;
      for (std::size_t j = 0; j < 16; ++j) s += w(j, k, l, j);
      tr = std::max(tr, std::abs(s));
    }
  rep.checks.push_back(at_most("Weyl tensor trace-free", "sum_j W_jklj = 0", tr, 1e-9));
  CurvatureTensor wc = weyl_cayley(1.0, 1);
  rep.checks.push_back(at_most("Weyl of R^O is the Cayley Weyl form", "W = 3/5 X ^ Y + P(X,Y)", max_abs(w - wc), 1e-9));

  const OssermanReport pos = osserman_check(ro, kDefaultSamples, kSpectralTolerance, o.seed);
  std::vector<int> pat(pos.spectrum.multiplicities.begin(), pos.spectrum.multiplicities.end());
  std::sort(pat.begin(), pat.end());
  rep.checks.push_back(equals("Cayley multiplicities", "multiplicities exactly 7 and 8", pat, std::vector<int>{7, 8}));
  return rep;
}

}  // namespace

SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
  if (name == "octonion") return octonion_suite(options);
  if (name == "clifford") return clifford_suite(options);
  if (name == "spin9") return spin9_suite(options);
  if (name == "curvature") return curvature_suite(options);
  throw std::invalid_argument("unknown suite: " + name);
}

json to_json(const Check& c) {
  return {{"name", c.name},
          {"anchor", c.anchor},
          {"measured", c.measured},
          {"expected", c.expected},
          {"tolerance", c.tolerance},
          {"pass", c.pass}};
}

json to_json(const SuiteReport& s) {
  json checks = json::array();
  for (const auto& c : s.checks) checks.push_back(to_json(c));
  return {{"suite", s.suite}, {"pass", s.pass()}, {"checks", checks}};
}

json verify_report(const std::vector<SuiteReport>& suites, const VerifyOptions& options) {
  json arr = json::array();
  bool pass = true;
  for (const auto& s : suites) {
    arr.push_back(to_json(s));
    pass = pass && s.pass();
  }
  return {{"suites", arr}, {"pass", pass}, {"seed", options.seed}, {"tolerance", options.tol}, {"version", kVersion}};
}

}  // namespace curvlab
