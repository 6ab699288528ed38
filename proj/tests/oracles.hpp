#pragma once

// Test-side reference implementations, written from the defining formulas without going
// through the library's tables or kernels.

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "curvlab/linalg.hpp"

namespace oracle {

using O8 = std::array<double, 8>;
using Q4 = std::array<double, 4>;

inline Q4 qmul(const Q4& p, const Q4& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3], p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1], p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}
inline Q4 qconj(const Q4& p) { return {p[0], -p[1], -p[2], -p[3]}; }

// (a, b)(c, d) = (ac - d*b, da + bc*)
inline O8 omul(const O8& x, const O8& y) {
  const Q4 a{x[0], x[1], x[2], x[3]}, b{x[4], x[5], x[6], x[7]};
  const Q4 c{y[0], y[1], y[2], y[3]}, d{y[4], y[5], y[6], y[7]};
  const Q4 p = qmul(a, c), q = qmul(qconj(d), b), r = qmul(d, a), s = qmul(b, qconj(c));
  return {p[0] - q[0], p[1] - q[1], p[2] - q[2], p[3] - q[3], r[0] + s[0], r[1] + s[1], r[2] + s[2], r[3] + s[3]};
}
inline O8 oconj(const O8& a) { return {a[0], -a[1], -a[2], -a[3], -a[4], -a[5], -a[6], -a[7]}; }
inline O8 basis(std::size_t i) {
  O8 e{};
  e[i] = 1.0;
  return e;
}

// S_0 = diag(id, -id), S_i(x1, x2) = (e_{i-1} x2*, x1* e_{i-1}) for i = 1..8.
inline std::vector<curvlab::Matrix> spin9_generators() {
  std::vector<curvlab::Matrix> s;
  curvlab::Matrix s0(16, 16);
  for (std::size_t i = 0; i < 8; ++i) {
    s0(i, i) = 1.0;
    s0(i + 8, i + 8) = -1.0;
  }
  s.push_back(s0);
  for (std::size_t a = 0; a < 8; ++a) {
    curvlab::Matrix m(16, 16);
    for (std::size_t c = 0; c < 16; ++c) {
      O8 x1{}, x2{};
      if (c < 8)
        x1[c] = 1.0;
      else
        x2[c - 8] = 1.0;
      const O8 top = omul(basis(a), oconj(x2));
      const O8 bot = omul(oconj(x1), basis(a));
      for (std::size_t r = 0; r < 8; ++r) {
        m(r, c) = top[r];
        m(r + 8, c) = bot[r];
      }
    }
    s.push_back(m);
  }
  return s;
}

inline double dot(const curvlab::Vector& a, const curvlab::Vector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline curvlab::Vector apply(const curvlab::Matrix& m, const curvlab::Vector& x) {
  curvlab::Vector y(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
  return y;
}

// <R(X,Y)Z,W> for lambda0 X^Y + sum eta_i (J_iX ^ J_iY + 2<J_iX,Y>J_i), evaluated literally:
// lambda0 (<X,Z><Y,W> - <Y,Z><X,W>) + sum eta (2<JX,Y><JZ,W> + <JZ,Y><JX,W> - <JZ,X><JY,W>).
inline double clifford_component(const std::vector<curvlab::Matrix>& j, double lambda0, const std::vector<double>& eta,
                                 const curvlab::Vector& x, const curvlab::Vector& y, const curvlab::Vector& z,
                                 const curvlab::Vector& w) {
  double v = lambda0 * (dot(x, z) * dot(y, w) - dot(y, z) * dot(x, w));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto jx = apply(j[i], x), jy = apply(j[i], y), jz = apply(j[i], z);
    v += eta[i] * (2.0 * dot(jx, y) * dot(jz, w) + dot(jz, y) * dot(jx, w) - dot(jz, x) * dot(jy, w));
  }
  return v;
}

// Jacobi operator Y -> R(X,Y)X from a component functor r(x, y, z, w) = <R(x,y)z,w>.
template <typename F>
curvlab::Matrix jacobi_bruteforce(std::size_t n, const curvlab::Vector& x, F&& r) {
  curvlab::Matrix m(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    curvlab::Vector ea(n, 0.0);
    ea[a] = 1.0;
    for (std::size_t b = 0; b < n; ++b) {
      curvlab::Vector eb(n, 0.0);
      eb[b] = 1.0;
      m(b, a) = r(x, ea, x, eb);
    }
  }
  return m;
}

}  // namespace oracle
