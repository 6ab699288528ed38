#pragma once

#include <array>
#include <vector>

#include "curvlab/linalg.hpp"

namespace curvlab {

/// Nine symmetric orthogonal operators S_0..S_8 on R^16 = O + O with
/// S_i S_j + S_j S_i = 2 delta_ij I and Tr S_i = 0.
///
///   S_0(x1, x2) = (x1, -x2)
///   S_i(x1, x2) = (e x2*, x1* e),  e = e_{i-1},  i = 1..8
class Spin9System {
 public:
  explicit Spin9System(std::array<Matrix, 9> s) : s_(std::move(s)) {}

  const Matrix& operator[](std::size_t i) const { return s_.at(i); }
  const std::array<Matrix, 9>& operators() const { return s_; }

 private:
  std::array<Matrix, 9> s_;
};

Spin9System make_spin9();

struct Spin9Defects {
  double symmetric = 0.0;    ///< max |S_i - S_i^t|
  double orthogonal = 0.0;   ///< max |S_i^t S_i - I|
  double anticommute = 0.0;  ///< max over all 81 pairs of |S_i S_j + S_j S_i - 2 delta_ij I|
  double trace = 0.0;        ///< max |Tr S_i|
};
Spin9Defects validate(const Spin9System& sys);

/// Sign s with S_0 S_1 ... S_8 = s I, or 0 if the product is not +-I to tol.
int product_sign(const Spin9System& sys, double tol = 1e-10);

/// S_w = sum_i w_i S_i.
Matrix s_w(const Spin9System& sys, std::span<const double> w);

/// Orthogonal projector onto the ||w||-eigenspace of S_w: (||w||^{-1} S_w + I) / 2.
/// Throws std::invalid_argument for w = 0.
Matrix eig_proj(const Spin9System& sys, std::span<const double> w);

/// A Q = sum_i S_i Q S_i.
Matrix a_op(const Spin9System& sys, const Matrix& q);

/// A as a 256 x 256 matrix on row-major vectorized operators: vec(A Q) = M vec(Q).
Matrix a_op_matrix(const Spin9System& sys);

/// Orthonormal (under Tr(Q1 Q2^t)) bases (1/4) S_{i1}...S_{ik}, i1 < ... < ik, of L_0..L_4.
struct LkDecomposition {
  std::array<std::vector<Matrix>, 5> bases;
  std::array<std::vector<std::array<int, 4>>, 5> labels;  ///< index tuples, -1 padded

  std::array<std::size_t, 5> dims() const;
};

LkDecomposition lk_decomposition(const Spin9System& sys);

/// Projections of a skew operator onto L_2 and L_3:
/// pi_2 = (A + 3)/8, pi_3 = -(A - 5)/8. Throw std::invalid_argument on non-skew input.
Matrix proj_l2(const Spin9System& sys, const Matrix& k);
Matrix proj_l3(const Spin9System& sys, const Matrix& k);

/// N(X, Y) = (A - id)(X ^ Y) q
///         = sum_i (<S_i X, q> S_i Y - <S_i Y, q> S_i X) - (<X, q> Y - <Y, q> X).
Vector n_from_q(const Spin9System& sys, std::span<const double> q, std::span<const double> x,
                std::span<const double> y);

/// Unit w in R^9 with S_w X = X:
///   w = ||X||^{-2} ((||x1||^2 - ||x2||^2) e_0 + 2 x1 x2),  X = (x1, x2).
/// Throws std::invalid_argument on X = 0.
Vector w_for_x(std::span<const double> x);

}  // namespace curvlab
