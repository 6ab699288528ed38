#include "curvlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace curvlab {

namespace {

void require_same_size(std::span<const double> a, std::span<const double> b, const char* what) {
  if (a.size() != b.size()) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> cols) {
  if (cols.empty()) return {};
  Matrix m(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, std::span<const double> v) {
  if (v.size() != rows_) throw std::invalid_argument("Matrix::set_column: dimension mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Matrix::trace() const {
  double s = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o, "Matrix::operator+=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o, "Matrix::operator-=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: dimension mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vector operator*(const Matrix& a, std::span<const double> x) {
  if (a.cols_ != x.size()) throw std::invalid_argument("Matrix-vector product: dimension mismatch");
  Vector y(a.rows_, 0.0);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols_; ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

double dot(std::span<const double> a, std::span<const double> b) {
  require_same_size(a, b, "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

Vector add(std::span<const double> a, std::span<const double> b) {
  require_same_size(a, b, "add");
  Vector r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(std::span<const double> a, std::span<const double> b) {
  require_same_size(a, b, "sub");
  Vector r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scaled(std::span<const double> a, double s) {
  Vector r(a.begin(), a.end());
  for (auto& x : r) x *= s;
  return r;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("axpy: dimension mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

Vector normalized(std::span<const double> a) {
  const double n = norm(a);
  if (n == 0.0) throw std::invalid_argument("normalized: zero vector");
  return scaled(a, 1.0 / n);
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector e(n, 0.0);
  e.at(i) = 1.0;
  return e;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  require_same_size(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Matrix outer(std::span<const double> a, std::span<const double> b) {
  Matrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * b[j];
  return m;
}

Matrix wedge(std::span<const double> x, std::span<const double> y) {
  require_same_size(x, y, "wedge");
  // (X ^ Y)Z = <X,Z>Y - <Y,Z>X, so the matrix is Y X^t - X Y^t.
  const std::size_t n = x.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = y[i] * x[j] - x[i] * y[j];
  return m;
}

double op_inner(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "op_inner");
  return dot(a.data(), b.data());
}

double frobenius_norm(const Matrix& a) { return std::sqrt(op_inner(a, a)); }

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (double x : a.data()) m = std::max(m, std::abs(x));
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  return max_abs_diff(a.data(), b.data());
}

double symmetry_defect(const Matrix& q) {
  if (!q.square()) throw std::invalid_argument("symmetry_defect: matrix not square");
  double m = 0.0;
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = i + 1; j < q.cols(); ++j) m = std::max(m, std::abs(q(i, j) - q(j, i)));
  return m;
}

double skew_defect(const Matrix& q) {
  if (!q.square()) throw std::invalid_argument("skew_defect: matrix not square");
  double m = 0.0;
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = i; j < q.cols(); ++j) m = std::max(m, std::abs(q(i, j) + q(j, i)));
  return m;
}

double orthogonality_defect(const Matrix& q) {
  return max_abs_diff(q.transpose() * q, Matrix::identity(q.cols()));
}

Matrix sym_part(const Matrix& q) { return 0.5 * (q + q.transpose()); }
Matrix skew_part(const Matrix& q) { return 0.5 * (q - q.transpose()); }

EigenDecomposition jacobi_eigen(const Matrix& q) {
  if (!q.square()) throw std::invalid_argument("jacobi_eigen: matrix not square");
  const std::size_t n = q.rows();
  Matrix a = sym_part(q);
  Matrix v = Matrix::identity(n);
  const double scale = frobenius_norm(a);
  const double target = 1e-14 * scale;

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t r = 0; r < n; ++r)
        if (p != r) s += a(p, r) * a(p, r);
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && scale > 0.0; ++sweep) {
    if (off_norm() <= target) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t r = p + 1; r < n; ++r) {
        const double apr = a(p, r);
        if (apr == 0.0) continue;
        const double theta = (a(r, r) - a(p, p)) / (2.0 * apr);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akr = a(k, r);
          a(k, p) = c * akp - s * akr;
          a(k, r) = s * akp + c * akr;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double ark = a(r, k);
          a(p, k) = c * apk - s * ark;
          a(r, k) = s * apk + c * ark;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkr = v(k, r);
          v(k, p) = c * vkp - s * vkr;
          v(k, r) = s * vkp + c * vkr;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  EigenDecomposition out{Vector(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<int> cluster_sorted(std::span<const double> ascending, double tol) {
  std::vector<int> cluster(ascending.size(), 0);
  double radius = 0.0;
  for (double x : ascending) radius = std::max(radius, std::abs(x));
  if (radius == 0.0) return cluster;
  int c = 0;
  for (std::size_t k = 1; k < ascending.size(); ++k) {
    if ((ascending[k] - ascending[k - 1]) / radius > tol) ++c;
    cluster[k] = c;
  }
  return cluster;
}

std::vector<Vector> Spectrum::cluster_vectors(std::size_t c) const {
  std::vector<Vector> out;
  for (std::size_t k = 0; k < raw.size(); ++k)
    if (cluster_of[k] == static_cast<int>(c)) out.push_back(basis.column(k));
  return out;
}

Spectrum sym_eig(const Matrix& q, double cluster_tol) {
  if (!q.square()) throw std::invalid_argument("sym_eig: matrix not square");
  if (symmetry_defect(q) > kSymmetryTolerance * std::max(1.0, max_abs(q)))
    throw std::invalid_argument("sym_eig: operator is not symmetric");

  EigenDecomposition eig = jacobi_eigen(q);
  Spectrum s;
  s.cluster_tolerance = cluster_tol;
  s.raw = std::move(eig.values);
  s.basis = std::move(eig.vectors);
  s.cluster_of = cluster_sorted(s.raw, cluster_tol);
  const std::size_t n = s.raw.size();
  for (std::size_t k = 0; k < n;) {
    std::size_t end = k;
    double sum = 0.0;
    while (end < n && s.cluster_of[end] == s.cluster_of[k]) sum += s.raw[end++];
    s.eigenvalues.push_back(sum / static_cast<double>(end - k));
    s.multiplicities.push_back(static_cast<int>(end - k));
    k = end;
  }
  return s;
}

std::vector<Vector> orthonormalize(std::span<const Vector> vs, double drop_tol) {
  double scale = 0.0;
  for (const auto& v : vs) scale = std::max(scale, norm(v));
  std::vector<Vector> out;
  if (scale == 0.0) return out;
  for (const auto& v : vs) {
    Vector w = v;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : out) axpy(-dot(u, w), u, w);
    const double nw = norm(w);
    if (nw <= drop_tol * scale) continue;
    for (auto& x : w) x /= nw;
    out.push_back(std::move(w));
  }
  return out;
}

Vector project(std::span<const double> x, std::span<const Vector> basis) {
  Vector p(x.size(), 0.0);
  for (const auto& u : basis) axpy(dot(u, x), u, p);
  return p;
}

std::vector<Vector> orthogonal_complement(std::span<const Vector> vs, std::size_t n) {
  std::vector<Vector> all = orthonormalize(vs);
  const std::size_t k = all.size();
  for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vector(n, i));
  std::vector<Vector> full = orthonormalize(all, 1e-8);
  return std::vector<Vector>(full.begin() + static_cast<std::ptrdiff_t>(k), full.end());
}

Matrix inverse_sqrt_spd(const Matrix& a) {
  EigenDecomposition e = jacobi_eigen(a);
  const std::size_t n = a.rows();
  Matrix r(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (e.values[k] <= 0.0) throw std::domain_error("inverse_sqrt_spd: matrix not positive definite");
    const double w = 1.0 / std::sqrt(e.values[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r(i, j) += w * e.vectors(i, k) * e.vectors(j, k);
  }
  return r;
}

Matrix polar_factor(const Matrix& a) { return a * inverse_sqrt_spd(a.transpose() * a); }

Vector least_squares(const Matrix& a, std::span<const double> b, double rcond) {
  if (a.rows() != b.size()) throw std::invalid_argument("least_squares: dimension mismatch");
  const Matrix at = a.transpose();
  const Matrix normal = at * a;
  const Vector rhs = at * b;
  EigenDecomposition e = jacobi_eigen(normal);
  const double top = e.values.empty() ? 0.0 : std::max(std::abs(e.values.front()), std::abs(e.values.back()));
  Vector x(a.cols(), 0.0);
  if (top == 0.0) return x;
  for (std::size_t k = 0; k < e.values.size(); ++k) {
    if (e.values[k] <= rcond * top) continue;
    const Vector vk = e.vectors.column(k);
    axpy(dot(vk, rhs) / e.values[k], vk, x);
  }
  return x;
}

Matrix complement_basis(std::span<const double> x) {
  const std::size_t n = x.size();
  const double nx = norm(x);
  if (nx == 0.0) throw std::invalid_argument("complement_basis: zero vector");
  Vector w = scaled(x, 1.0 / nx);
  const double s = w[0] >= 0.0 ? 1.0 : -1.0;
  w[0] += s;
  const double nw2 = dot(w, w);
  Matrix b(n, n - 1);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) b(i, j - 1) = (i == j ? 1.0 : 0.0) - 2.0 * w[i] * w[j] / nw2;
  return b;
}

}  // namespace curvlab
