#include "curvlab/spin9.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "curvlab/octonion.hpp"

namespace curvlab {

namespace {

constexpr std::size_t kDim = 16;

void split(std::span<const double> x, Octonion& x1, Octonion& x2) {
  if (x.size() != kDim) throw std::invalid_argument("spin9: expected a vector in R^16");
  for (std::size_t i = 0; i < 8; ++i) {
    x1[i] = x[i];
    x2[i] = x[i + 8];
  }
}

}  // namespace

Spin9System make_spin9() {
  std::array<Matrix, 9> s;
  s[0] = Matrix(kDim, kDim);
  for (std::size_t i = 0; i < kDim; ++i) s[0](i, i) = i < 8 ? 1.0 : -1.0;
  for (std::size_t op = 1; op <= 8; ++op) {
    const Octonion e = Octonion::basis(op - 1);
    Matrix m(kDim, kDim);
    for (std::size_t k = 0; k < kDim; ++k) {
      Octonion x1, x2;
      if (k < 8) x1[k] = 1.0; else x2[k - 8] = 1.0;
      const Octonion y1 = e * conj(x2);
      const Octonion y2 = conj(x1) * e;
      for (std::size_t i = 0; i < 8; ++i) {
        m(i, k) = y1[i];
        m(i + 8, k) = y2[i];
      }
    }
    s[op] = std::move(m);
  }
  return Spin9System(std::move(s));
}

Spin9Defects validate(const Spin9System& sys) {
  Spin9Defects d;
  const Matrix id = Matrix::identity(kDim);
  for (std::size_t i = 0; i < 9; ++i) {
    d.symmetric = std::max(d.symmetric, symmetry_defect(sys[i]));
    d.orthogonal = std::max(d.orthogonal, orthogonality_defect(sys[i]));
    d.trace = std::max(d.trace, std::abs(sys[i].trace()));
    for (std::size_t j = 0; j < 9; ++j) {
      Matrix ac = sys[i] * sys[j] + sys[j] * sys[i];
      if (i == j) ac -= 2.0 * id;
      d.anticommute = std::max(d.anticommute, max_abs(ac));
    }
  }
  return d;
}

int product_sign(const Spin9System& sys, double tol) {
  Matrix p = Matrix::identity(kDim);
  for (std::size_t i = 0; i < 9; ++i) p = p * sys[i];
  const Matrix id = Matrix::identity(kDim);
  if (max_abs_diff(p, id) <= tol) return 1;
  if (max_abs_diff(p, -id) <= tol) return -1;
  return 0;
}

Matrix s_w(const Spin9System& sys, std::span<const double> w) {
  if (w.size() != 9) throw std::invalid_argument("s_w: expected w in R^9");
  Matrix m(kDim, kDim);
  for (std::size_t i = 0; i < 9; ++i)
    if (w[i] != 0.0) m += w[i] * sys[i];
  return m;
}

Matrix eig_proj(const Spin9System& sys, std::span<const double> w) {
  const double nw = norm(w);
  if (nw == 0.0) throw std::invalid_argument("eig_proj: w must be nonzero");
  return 0.5 * ((1.0 / nw) * s_w(sys, w) + Matrix::identity(kDim));
}

Matrix a_op(const Spin9System& sys, const Matrix& q) {
  if (q.rows() != kDim || q.cols() != kDim) throw std::invalid_argument("a_op: expected a 16x16 operator");
  Matrix out(kDim, kDim);
  for (std::size_t i = 0; i < 9; ++i) out += sys[i] * q * sys[i];
  return out;
}

Matrix a_op_matrix(const Spin9System& sys) {
  // (S Q S)_{ab} = sum_{cd} S_ac Q_cd S_db
  constexpr std::size_t n2 = kDim * kDim;
  Matrix m(n2, n2);
  for (std::size_t i = 0; i < 9; ++i) {
    const Matrix& s = sys[i];
    for (std::size_t a = 0; a < kDim; ++a)
      for (std::size_t b = 0; b < kDim; ++b)
        for (std::size_t c = 0; c < kDim; ++c) {
          const double sac = s(a, c);
          if (sac == 0.0) continue;
          for (std::size_t d = 0; d < kDim; ++d) m(a * kDim + b, c * kDim + d) += sac * s(d, b);
        }
  }
  return m;
}

std::array<std::size_t, 5> LkDecomposition::dims() const {
  std::array<std::size_t, 5> d{};
  for (std::size_t k = 0; k < 5; ++k) d[k] = bases[k].size();
  return d;
}

LkDecomposition lk_decomposition(const Spin9System& sys) {
  LkDecomposition dec;
  std::array<int, 4> idx{-1, -1, -1, -1};
  auto emit = [&](std::size_t k) {
    Matrix p = Matrix::identity(kDim);
    for (std::size_t t = 0; t < k; ++t) p = p * sys[static_cast<std::size_t>(idx[t])];
    dec.bases[k].push_back(0.25 * p);
    dec.labels[k].push_back(idx);
  };
  emit(0);
  for (int a = 0; a < 9; ++a) {
    idx = {a, -1, -1, -1};
    emit(1);
    for (int b = a + 1; b < 9; ++b) {
      idx = {a, b, -1, -1};
      emit(2);
      for (int c = b + 1; c < 9; ++c) {
        idx = {a, b, c, -1};
        emit(3);
        for (int d = c + 1; d < 9; ++d) {
          idx = {a, b, c, d};
          emit(4);
        }
      }
    }
  }
  // Lexicographic order within each level.
  for (std::size_t k = 2; k < 5; ++k) {
    std::vector<std::size_t> order(dec.labels[k].size());
    for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return dec.labels[k][x] < dec.labels[k][y]; });
    std::vector<Matrix> b;
    std::vector<std::array<int, 4>> l;
    for (std::size_t t : order) {
      b.push_back(dec.bases[k][t]);
      l.push_back(dec.labels[k][t]);
    }
    dec.bases[k] = std::move(b);
    dec.labels[k] = std::move(l);
  }
  return dec;
}

namespace {

void require_skew(const Matrix& k, const char* what) {
  if (k.rows() != kDim || k.cols() != kDim) throw std::invalid_argument(std::string(what) + ": expected 16x16");
  if (skew_defect(k) > 1e-10 * std::max(1.0, max_abs(k)))
    throw std::invalid_argument(std::string(what) + ": operator is not skew-symmetric");
}

}  // namespace

Matrix proj_l2(const Spin9System& sys, const Matrix& k) {
  require_skew(k, "proj_l2");
  return 0.125 * (a_op(sys, k) + 3.0 * k);
}

Matrix proj_l3(const Spin9System& sys, const Matrix& k) {
  require_skew(k, "proj_l3");
  return -0.125 * (a_op(sys, k) - 5.0 * k);
}

Vector n_from_q(const Spin9System& sys, std::span<const double> q, std::span<const double> x,
                std::span<const double> y) {
  if (q.size() != kDim || x.size() != kDim || y.size() != kDim)
    throw std::invalid_argument("n_from_q: expected vectors in R^16");
  Vector out(kDim, 0.0);
  for (std::size_t i = 0; i < 9; ++i) {
    const Vector sx = sys[i] * x;
    const Vector sy = sys[i] * y;
    axpy(dot(sx, q), sy, out);
    axpy(-dot(sy, q), sx, out);
  }
  axpy(-dot(x, q), y, out);
  axpy(dot(y, q), x, out);
  return out;
}

Vector w_for_x(std::span<const double> x) {
  Octonion x1, x2;
  split(x, x1, x2);
  const double n1 = norm_sq(x1);
  const double n2 = norm_sq(x2);
  const double total = n1 + n2;
  if (total == 0.0) throw std::invalid_argument("w_for_x: X must be nonzero");
  const Octonion p = x1 * x2;
  Vector w(9);
  w[0] = (n1 - n2) / total;
  for (std::size_t i = 0; i < 8; ++i) w[i + 1] = 2.0 * p[i] / total;
  return w;
}

}  // namespace curvlab
