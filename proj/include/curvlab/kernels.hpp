#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "curvlab/linalg.hpp"

// Hot loops over dense lowered 4-tensors, stored flat with
// index ((i*n + j)*n + k)*n + l. Each kernel has an OpenMP version (parallel over an output
// index, so results do not depend on the thread count) and a plain serial reference used by
// the tests and the benchmark.
namespace curvlab::kernels {

enum class TermKind {
  /// (A X) ^ (B Y):  A[k][i] B[l][j] - B[k][j] A[l][i]
  Wedge,
  /// 2 <A X, Y> B Z:  2 A[j][i] B[l][k]
  Scalar,
};

struct Term {
  TermKind kind;
  double coef;
  const Matrix* a;
  const Matrix* b;
};

/// out += sum of terms. `out` has n^4 entries.
void assemble(std::size_t n, std::span<const Term> terms, std::span<double> out);
void assemble_serial(std::size_t n, std::span<const Term> terms, std::span<double> out);

/// Gradient in D of <r, W(D,J) + W(J,D) + S(D,J) + S(J,D)> with W = Wedge and S = Scalar,
/// i.e. the adjoint of the derivative of the Clifford term at J.
Matrix clifford_gradient(std::size_t n, std::span<const double> r, const Matrix& j);
Matrix clifford_gradient_serial(std::size_t n, std::span<const double> r, const Matrix& j);

/// Ric_kl = sum_j R[k][j][l][j].
Matrix ricci(std::size_t n, std::span<const double> r);
Matrix ricci_serial(std::size_t n, std::span<const double> r);

/// Jacobi operator (R_X)_{lj} = sum_{ik} X_i X_k R[i][j][k][l], symmetrized.
Matrix jacobi(std::size_t n, std::span<const double> r, std::span<const double> x);

/// Ascending eigenvalues of the Jacobi operator restricted to x^perp, one list per direction.
std::vector<Vector> reduced_spectra(std::size_t n, std::span<const double> r, std::span<const Vector> dirs);
std::vector<Vector> reduced_spectra_serial(std::size_t n, std::span<const double> r,
                                           std::span<const Vector> dirs);

/// Euclidean inner product of two flat tensors.
double inner(std::span<const double> a, std::span<const double> b);

bool parallel_enabled();
int max_threads();

}  // namespace curvlab::kernels
