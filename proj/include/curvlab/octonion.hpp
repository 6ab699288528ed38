#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>

#include "curvlab/linalg.hpp"

namespace curvlab {

/// One entry of the octonion structure-constant table: e_i * e_j = sign * e_index.
struct BasisProduct {
  int sign;
  int index;
};

/**
 * Multiplication table of the octonions in the basis e0 = 1, e1, ..., e7.
 *
 * Generated by Cayley-Dickson doubling of the quaternions (1, i, j, k) = (e0, e1, e2, e3),
 * with e4 = (0, 1) and the doubling rule
 *
 *     (a, b) * (c, d) = (a c - conj(d) b,  d a + b conj(c)).
 *
 * Row i, column j holds e_i * e_j. Every imaginary unit squares to -1 and distinct imaginary
 * units anticommute; the table is therefore antisymmetric off the e0 row/column and the
 * diagonal. Results derived from it (norms, identities, spectra) do not depend on this
 * particular choice of composition-algebra basis; individual signs do.
 */
inline constexpr std::array<std::array<BasisProduct, 8>, 8> kOctonionTable{{
    {{{+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}, {+1, 4}, {+1, 5}, {+1, 6}, {+1, 7}}},
    {{{+1, 1}, {-1, 0}, {+1, 3}, {-1, 2}, {+1, 5}, {-1, 4}, {-1, 7}, {+1, 6}}},
    {{{+1, 2}, {-1, 3}, {-1, 0}, {+1, 1}, {+1, 6}, {+1, 7}, {-1, 4}, {-1, 5}}},
    {{{+1, 3}, {+1, 2}, {-1, 1}, {-1, 0}, {+1, 7}, {-1, 6}, {+1, 5}, {-1, 4}}},
    {{{+1, 4}, {-1, 5}, {-1, 6}, {-1, 7}, {-1, 0}, {+1, 1}, {+1, 2}, {+1, 3}}},
    {{{+1, 5}, {+1, 4}, {-1, 7}, {+1, 6}, {-1, 1}, {-1, 0}, {-1, 3}, {+1, 2}}},
    {{{+1, 6}, {+1, 7}, {+1, 4}, {-1, 5}, {-1, 2}, {+1, 3}, {-1, 0}, {-1, 1}}},
    {{{+1, 7}, {-1, 6}, {+1, 5}, {+1, 4}, {-1, 3}, {-1, 2}, {+1, 1}, {-1, 0}}},
}};

/// Element of the 8-dimensional composition algebra over `Scalar` (double for the octonions,
/// std::complex<double> for the bioctonions). The inner product is bilinear in both cases.
template <typename Scalar>
class BasicOctonion {
 public:
  using value_type = Scalar;

  constexpr BasicOctonion() : c_{} {}
  constexpr explicit BasicOctonion(const std::array<Scalar, 8>& coeffs) : c_(coeffs) {}

  static constexpr BasicOctonion unit() { return basis(0); }
  static constexpr BasicOctonion basis(std::size_t i) {
    BasicOctonion e;
    e.c_[i] = Scalar(1);
    return e;
  }
  static constexpr BasicOctonion real(Scalar s) {
    BasicOctonion e;
    e.c_[0] = s;
    return e;
  }

  constexpr Scalar& operator[](std::size_t i) { return c_[i]; }
  constexpr const Scalar& operator[](std::size_t i) const { return c_[i]; }
  constexpr const std::array<Scalar, 8>& coeffs() const { return c_; }

  constexpr BasicOctonion& operator+=(const BasicOctonion& o) {
    for (std::size_t i = 0; i < 8; ++i) c_[i] += o.c_[i];
    return *this;
  }
  constexpr BasicOctonion& operator-=(const BasicOctonion& o) {
    for (std::size_t i = 0; i < 8; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  constexpr BasicOctonion& operator*=(Scalar s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend constexpr BasicOctonion operator+(BasicOctonion a, const BasicOctonion& b) { return a += b; }
  friend constexpr BasicOctonion operator-(BasicOctonion a, const BasicOctonion& b) { return a -= b; }
  friend constexpr BasicOctonion operator-(BasicOctonion a) { return a *= Scalar(-1); }
  friend constexpr BasicOctonion operator*(BasicOctonion a, Scalar s) { return a *= s; }
  friend constexpr BasicOctonion operator*(Scalar s, BasicOctonion a) { return a *= s; }

  /// Non-associative product from kOctonionTable.
  friend constexpr BasicOctonion operator*(const BasicOctonion& a, const BasicOctonion& b) {
    BasicOctonion r;
    for (std::size_t i = 0; i < 8; ++i) {
      if (a.c_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < 8; ++j) {
        const auto& p = kOctonionTable[i][j];
        r.c_[static_cast<std::size_t>(p.index)] += Scalar(p.sign) * a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  friend constexpr bool operator==(const BasicOctonion&, const BasicOctonion&) = default;

 private:
  std::array<Scalar, 8> c_;
};

using Octonion = BasicOctonion<double>;
using Bioctonion = BasicOctonion<std::complex<double>>;

template <typename Scalar>
constexpr BasicOctonion<Scalar> mul(const BasicOctonion<Scalar>& a, const BasicOctonion<Scalar>& b) {
  return a * b;
}

/// a* = 2<a,1>1 - a.
template <typename Scalar>
constexpr BasicOctonion<Scalar> conj(const BasicOctonion<Scalar>& a) {
  BasicOctonion<Scalar> r = -a;
  r[0] = a[0];
  return r;
}

/// Euclidean (for bioctonions: complex-bilinear, not Hermitian) pairing of coefficient vectors.
template <typename Scalar>
constexpr Scalar inner(const BasicOctonion<Scalar>& a, const BasicOctonion<Scalar>& b) {
  Scalar s{};
  for (std::size_t i = 0; i < 8; ++i) s += a[i] * b[i];
  return s;
}

template <typename Scalar>
constexpr Scalar norm_sq(const BasicOctonion<Scalar>& a) {
  return inner(a, a);
}

/// a^{-1} = a* / |a|^2. Throws std::domain_error when |a|^2 vanishes (a = 0, or a bioctonion
/// null vector).
template <typename Scalar>
BasicOctonion<Scalar> inverse(const BasicOctonion<Scalar>& a) {
  const Scalar n = norm_sq(a);
  if (n == Scalar(0)) throw std::domain_error("octonion inverse: element has zero norm");
  return conj(a) * (Scalar(1) / n);
}

/// Imaginary part (projection onto span(e1..e7)).
template <typename Scalar>
constexpr BasicOctonion<Scalar> imag(const BasicOctonion<Scalar>& a) {
  BasicOctonion<Scalar> r = a;
  r[0] = Scalar(0);
  return r;
}

/// Embedding of a real octonion into the bioctonions.
Bioctonion complexify(const Octonion& a);

/// Matrix of q -> a q in the e-basis.
Matrix left_mul_op(const Octonion& a);
/// Matrix of q -> q a in the e-basis.
Matrix right_mul_op(const Octonion& a);

Octonion to_octonion(std::span<const double> v);
Vector to_vector(const Octonion& a);

}  // namespace curvlab
