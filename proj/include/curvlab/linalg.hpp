#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace curvlab {

using Vector = std::vector<double>;

/// Dense row-major real matrix. Used for operators on R^n (square) and for the occasional
/// rectangular least-squares system.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> d);
  /// Matrix whose columns are `cols` (all of equal length).
  static Matrix from_columns(std::span<const Vector> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }

  Vector column(std::size_t j) const;
  void set_column(std::size_t j, std::span<const double> v);
  Vector row(std::size_t i) const;

  Matrix transpose() const;
  double trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(double s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= -1.0; }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, std::span<const double> x);
  friend Vector operator*(const Matrix& a, const Vector& x) { return a * std::span<const double>(x); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Vector arithmetic.
double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);
Vector add(std::span<const double> a, std::span<const double> b);
Vector sub(std::span<const double> a, std::span<const double> b);
Vector scaled(std::span<const double> a, double s);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
Vector normalized(std::span<const double> a);
Vector unit_vector(std::size_t n, std::size_t i);
double max_abs_diff(std::span<const double> a, std::span<const double> b);

Matrix outer(std::span<const double> a, std::span<const double> b);

/// (X ^ Y) Z = <X,Z> Y - <Y,Z> X. Throws std::invalid_argument on a dimension mismatch.
Matrix wedge(std::span<const double> x, std::span<const double> y);

/// <Q1, Q2> = Tr(Q1 Q2^t).
double op_inner(const Matrix& a, const Matrix& b);
double frobenius_norm(const Matrix& a);
double max_abs(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Largest |Q - Q^t| entry (symmetry defect) and largest |Q + Q^t| entry (skewness defect).
double symmetry_defect(const Matrix& q);
double skew_defect(const Matrix& q);
/// Largest entry of |Q^t Q - I|.
double orthogonality_defect(const Matrix& q);

Matrix sym_part(const Matrix& q);
Matrix skew_part(const Matrix& q);

/// Full eigendecomposition of a symmetric matrix, eigenvalues ascending, eigenvectors in the
/// columns of `vectors` (orthonormal).
struct EigenDecomposition {
  Vector values;
  Matrix vectors;
};

/// Cyclic Jacobi rotations in fixed row-by-row sweep order. Converges when the off-diagonal
/// Frobenius mass falls below 1e-14 * ||Q||. Deterministic for a fixed input.
EigenDecomposition jacobi_eigen(const Matrix& q);

/// Eigenvalues clustered into distinct values with multiplicities.
struct Spectrum {
  Vector eigenvalues;                 ///< distinct values, strictly increasing
  std::vector<int> multiplicities;    ///< same length as eigenvalues, sums to n
  Vector raw;                         ///< all n eigenvalues, ascending
  Matrix basis;                       ///< orthonormal eigenvectors, column k for raw[k]
  std::vector<int> cluster_of;        ///< cluster index of raw[k]
  double cluster_tolerance = 0.0;     ///< absolute tolerance after normalizing to unit spectral radius

  std::size_t dimension() const { return raw.size(); }
  /// Eigenvectors (columns of `basis`) of cluster c.
  std::vector<Vector> cluster_vectors(std::size_t c) const;
};

inline constexpr double kDefaultClusterTolerance = 1e-7;
inline constexpr double kSymmetryTolerance = 1e-12;

/// Eigendecomposition of a symmetric operator with multiplicity clustering. Throws
/// std::invalid_argument if Q is not square or not symmetric to `kSymmetryTolerance`
/// (relative to max(1, max|Q|)).
Spectrum sym_eig(const Matrix& q, double cluster_tol = kDefaultClusterTolerance);

/// Groups ascending values into clusters; consecutive gaps above tol * spectral radius split.
/// Returns cluster index per value.
std::vector<int> cluster_sorted(std::span<const double> ascending, double tol);

/// Modified Gram-Schmidt. Vectors whose residual norm falls below drop_tol (relative to the
/// largest input norm) are dropped, so rank deficiency shows up as a shorter result.
std::vector<Vector> orthonormalize(std::span<const Vector> vs, double drop_tol = 1e-10);

/// Orthogonal projection of x onto span(basis); `basis` must be orthonormal.
Vector project(std::span<const double> x, std::span<const Vector> basis);

/// Orthonormal basis of the orthogonal complement of span(vs) in R^n.
std::vector<Vector> orthogonal_complement(std::span<const Vector> vs, std::size_t n);

/// Orthogonal factor of the polar decomposition A = U P (A square, invertible).
Matrix polar_factor(const Matrix& a);

/// Symmetric inverse square root of a symmetric positive definite matrix.
Matrix inverse_sqrt_spd(const Matrix& a);

/// Minimum-norm least-squares solution of A x = b via the normal equations and a truncated
/// eigendecomposition (singular values below rcond * max are discarded).
Vector least_squares(const Matrix& a, std::span<const double> b, double rcond = 1e-12);

/// Householder-based orthonormal basis of x^perp (n-1 columns). x must be nonzero.
Matrix complement_basis(std::span<const double> x);

}  // namespace curvlab
