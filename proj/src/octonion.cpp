#include "curvlab/octonion.hpp"

#include <stdexcept>

namespace curvlab {

Bioctonion complexify(const Octonion& a) {
  Bioctonion r;
  for (std::size_t i = 0; i < 8; ++i) r[i] = a[i];
  return r;
}

Matrix left_mul_op(const Octonion& a) {
  Matrix m(8, 8);
  for (std::size_t j = 0; j < 8; ++j) {
    const Octonion col = a * Octonion::basis(j);
    for (std::size_t i = 0; i < 8; ++i) m(i, j) = col[i];
  }
  return m;
}

Matrix right_mul_op(const Octonion& a) {
  Matrix m(8, 8);
  for (std::size_t j = 0; j < 8; ++j) {
    const Octonion col = Octonion::basis(j) * a;
    for (std::size_t i = 0; i < 8; ++i) m(i, j) = col[i];
  }
  return m;
}

Octonion to_octonion(std::span<const double> v) {
  if (v.size() != 8) throw std::invalid_argument("to_octonion: expected 8 components");
  Octonion r;
  for (std::size_t i = 0; i < 8; ++i) r[i] = v[i];
  return r;
}

Vector to_vector(const Octonion& a) { return Vector(a.coeffs().begin(), a.coeffs().end()); }

}  // namespace curvlab
