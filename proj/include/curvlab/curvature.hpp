#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "curvlab/clifford.hpp"
#include "curvlab/linalg.hpp"

namespace curvlab {

/**
 * Algebraic curvature tensor on R^n stored densely and fully lowered:
 *
 *     R[i][j][k][l] = <R(e_i, e_j) e_k, e_l>
 *
 * with R(X, Y)Z following the Jacobi convention R_X Y = R(X, Y)X, so that the unit sphere has
 * R_X = id on X^perp. In this storage the sectional curvature of the (e_i, e_j) plane is
 * R[i][j][i][j].
 */
class CurvatureTensor {
 public:
  CurvatureTensor() = default;
  explicit CurvatureTensor(std::size_t n) : n_(n), c_(n * n * n * n, 0.0) {}
  CurvatureTensor(std::size_t n, std::vector<double> components);

  std::size_t n() const { return n_; }
  std::size_t size() const { return c_.size(); }

  double& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return c_[((i * n_ + j) * n_ + k) * n_ + l];
  }
  double operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return c_[((i * n_ + j) * n_ + k) * n_ + l];
  }

  std::span<double> data() { return c_; }
  std::span<const double> data() const { return c_; }

  CurvatureTensor& operator+=(const CurvatureTensor& o);
  CurvatureTensor& operator-=(const CurvatureTensor& o);
  CurvatureTensor& operator*=(double s);

  friend CurvatureTensor operator+(CurvatureTensor a, const CurvatureTensor& b) { return a += b; }
  friend CurvatureTensor operator-(CurvatureTensor a, const CurvatureTensor& b) { return a -= b; }
  friend CurvatureTensor operator*(double s, CurvatureTensor a) { return a *= s; }

 private:
  std::size_t n_ = 0;
  std::vector<double> c_;
};

/// Cliff(nu; J_1..J_nu; lambda0, eta_1..eta_nu). Construction throws std::invalid_argument if
/// an eta is zero or the eta count differs from nu.
struct CliffordSpec {
  CliffordSpec(CliffordSystem system, double lambda0, Vector eta);

  CliffordSystem system;
  double lambda0 = 0.0;
  Vector eta;
};

/// lambda0 (X ^ Y).
CurvatureTensor constant_curvature(std::size_t n, double lambda0);

/// lambda0 X ^ Y + sum_i eta_i (J_i X ^ J_i Y + 2 <J_i X, Y> J_i).
/// Evaluated on Z this is
///   lambda0 (<X,Z>Y - <Y,Z>X) + sum_i eta_i (2<J_iX,Y>J_iZ + <J_iZ,Y>J_iX - <J_iZ,X>J_iY).
CurvatureTensor clifford_tensor(const CliffordSpec& spec);

/// Same Clifford terms with unit coefficients and without the constant-curvature part; the
/// building block of the recovery model.
CurvatureTensor clifford_term(const Matrix& j);

/// 3 X ^ Y + sum_{i=0}^{8} S_i X ^ S_i Y on R^16.
CurvatureTensor cayley_tensor();

/// sum_{i=0}^{8} S_i X ^ S_i Y on R^16.
CurvatureTensor spin9_sum();

/// a R^O + b R^S on R^16.
CurvatureTensor cayley_combination(double a, double b);

/// rho X ^ Y - rho Y ^ X + sum_i eta_i (J_i X ^ J_i Y + 2 <J_i X, Y> J_i). Throws on a
/// non-symmetric rho or an eta count mismatch.
CurvatureTensor clifford_with_rho(const CliffordSystem& system, const Matrix& rho, std::span<const double> eta);

/// rho X ^ Y - rho Y ^ X + epsilon f sum_i S_i X ^ S_i Y on R^16. Throws unless
/// epsilon is +1 or -1 and rho is symmetric 16x16.
CurvatureTensor cayley_with_rho(const Matrix& rho, int epsilon, double f);

/// epsilon f (3/5 X ^ Y + sum_i S_i X ^ S_i Y).
CurvatureTensor weyl_cayley(double f, int epsilon);

/// Jacobi operator Y -> R(X, Y)X. Throws std::invalid_argument on a dimension mismatch.
Matrix jacobi(const CurvatureTensor& r, std::span<const double> x);

Matrix ricci(const CurvatureTensor& r);
double scalar(const CurvatureTensor& r);

/// W = R - (rho X ^ Y - rho Y ^ X),  rho = Ric/(n-2) - scal/(2(n-1)(n-2)) id.
/// Throws std::invalid_argument for n < 4.
CurvatureTensor weyl(const CurvatureTensor& r);

/// Plain sum of squared lowered components.
double norm_sq(const CurvatureTensor& r);
double max_abs(const CurvatureTensor& r);

struct SymmetryReport {
  double antisym_first = 0.0;   ///< R_ijkl + R_jikl
  double antisym_second = 0.0;  ///< R_ijkl + R_ijlk
  double pair = 0.0;            ///< R_ijkl - R_klij
  double bianchi = 0.0;         ///< R_ijkl + R_jkil + R_kijl

  double max() const;
  bool ok(double tol = 1e-10) const { return max() <= tol; }
};

SymmetryReport validate_symmetries(const CurvatureTensor& r);

/// <R(e_i, e_j) e_i, e_j> for i != j.
double sectional_curvature(const CurvatureTensor& r, std::size_t i, std::size_t j);
/// <R(X, Y)X, Y> / (|X|^2 |Y|^2 - <X,Y>^2). Throws on a degenerate plane.
double sectional_curvature(const CurvatureTensor& r, std::span<const double> x, std::span<const double> y);

/// Tensor of R(Q^t ., Q^t .)Q^t ., lowered: R'_{ijkl} = Q_ia Q_jb Q_kc Q_ld R_abcd.
CurvatureTensor conjugate(const CurvatureTensor& r, const Matrix& q);

/// Operator on Lambda^2 in the basis e_i ^ e_j, i < j: B[(ij),(kl)] = R[i][j][k][l].
Matrix bivector_operator(const CurvatureTensor& r);

/// sum_t c_t A_t X ^ A_t Y for a few random symmetric A_t, scaled to max |component| = 1.
CurvatureTensor random_curvature_tensor(std::size_t n, std::mt19937_64& rng);

/// Random orthogonal matrix (QR of a Gaussian matrix with sign fix).
Matrix random_orthogonal(std::size_t n, std::mt19937_64& rng);
/// Uniform random unit vector.
Vector random_unit(std::size_t n, std::mt19937_64& rng);
/// Random symmetric matrix with standard normal entries above the diagonal.
Matrix random_symmetric(std::size_t n, std::mt19937_64& rng);

}  // namespace curvlab
