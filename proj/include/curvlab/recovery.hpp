#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvlab/clifford.hpp"
#include "curvlab/curvature.hpp"
#include "curvlab/osserman.hpp"

namespace curvlab {

struct RecoveryConfig {
  int nu = 8;
  int restarts = 4;
  int max_iterations = 15;          ///< Gauss-Newton iterations per restart
  int cg_iterations = 12;           ///< CGLS iterations per Gauss-Newton step
  double armijo = 1e-4;
  int max_backtracks = 10;
  int extra_directions = 3;         ///< directions used to pin the U -> U block
  std::uint64_t seed = 0;
  double fit_tolerance = 1e-6;
  double constraint_tolerance = 1e-8;
  double spectral_tolerance = kSpectralTolerance;

  /// Throws std::invalid_argument unless 1 <= nu <= 8, restarts >= 1, iterations >= 0.
  void validate() const;
};

/// Fitted Cliff(nu; J; lambda0, eta) for a tensor.
struct CliffordFit {
  CliffordSystem system;
  double lambda0 = 0.0;
  Vector eta;
  double residual = 1.0;              ///< ||R - R_fit|| / ||R|| (absolute if R = 0)
  double constraint_violation = 0.0;  ///< CliffordDefects::max of the fitted system
  double stage1_residual = 1.0;
  int iterations = 0;
  int restarts = 0;
  int best_restart = -1;
  bool feasible = true;               ///< false when no eigenvalue has multiplicity n - 1 - nu
  bool eta_zero_rejected = false;     ///< some eta vanished; not a Clifford structure
  bool success = false;
  StructureLabel verdict;             ///< CliffordCompatible(nu), ConstantCurvature, Flat or Unknown
  std::string note;

  Vector sorted_eta() const;
};

struct SpectralSeed {
  double lambda0 = 0.0;
  Vector eta;               ///< one per candidate vector
  std::vector<Vector> v;    ///< orthonormal eigenvectors of the non-lambda0 eigenspaces at X0
};

/// Reads lambda0, eta and candidate vectors J_i X0 off the Jacobi operator at X0. lambda0 is the
/// eigenvalue whose multiplicity m gives the largest admissible nu = n-1-m <= 8 (so a {7, 8}
/// spectrum on R^16 reads as nu = 8 with the 8-fold value as the eta group); without an
/// admissible m it is the most-multiple eigenvalue. Throws std::domain_error if R is not Osserman at tol or has
/// a single reduced eigenvalue (nothing to seed).
SpectralSeed spectral_seed(const CurvatureTensor& r, std::span<const double> x0, double tol = kSpectralTolerance);

/// Model tensor lambda0 R^S + sum_k eta_k (J_k X ^ J_k Y + 2 <J_k X, Y> J_k).
CurvatureTensor clifford_model(std::span<const Matrix> j, double lambda0, std::span<const double> eta);

/// Restores the Clifford relations of an approximate system: skew projection, polar factor,
/// symmetric (Loewdin) orthonormalization under <A, B> = Tr(A B^t)/n, then for k = 1..nu the
/// projection J_k -> (J_k + J_a J_k J_a)/2 onto the part anticommuting with each earlier J_a,
/// followed by the polar factor. Exact up to rounding. Returns std::nullopt if a generator
/// becomes singular.
std::optional<std::vector<Matrix>> restore_clifford(std::vector<Matrix> j);

/// Reconstructs a Clifford structure of the configured nu; never throws on fit failure.
CliffordFit reconstruct(const CurvatureTensor& r, const RecoveryConfig& config);

struct CayleyFit {
  bool available = false;  ///< only on R^16
  double a = 0.0;
  double b = 0.0;
  double residual = 1.0;
};

/// Least-squares R ~ a R^O + b R^S in the standard frame.
CayleyFit fit_cayley(const CurvatureTensor& r);

struct ProbeConfig {
  int samples = kDefaultSamples;
  double spectral_tolerance = kSpectralTolerance;
  double fit_tolerance = 1e-6;
  double cayley_tolerance = 1e-8;
  int restarts = 2;
  std::uint64_t seed = 0;
};

struct ProbeReport {
  OssermanReport osserman;
  std::vector<CliffordFit> fits;  ///< one per admissible nu, ascending nu
  CayleyFit cayley;
  std::string verdict;            ///< Flat, NotOsserman, ConstantCurvature, Clifford(nu), Cayley, Unresolved
};

/// Osserman check, classification, a Clifford fit for each admissible nu and a Cayley fit.
ProbeReport conjecture_a_probe(const CurvatureTensor& r, const ProbeConfig& config = {});

}  // namespace curvlab
