#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvlab/linalg.hpp"

namespace curvlab {

inline constexpr double kCliffordTolerance = 1e-10;

/// Largest violations of the Clifford-system axioms.
struct CliffordDefects {
  double skew = 0.0;           ///< max |J_i + J_i^t|
  double orthogonal = 0.0;     ///< max |J_i^t J_i - I|
  double anticommute = 0.0;    ///< max |J_i J_j + J_j J_i + 2 delta_ij I|

  double max() const;
  bool ok(double tol = kCliffordTolerance) const { return max() <= tol; }
};

/**
 * nu anticommuting almost Hermitian structures J_1..J_nu on R^n:
 * each J_i skew-symmetric and orthogonal, J_i J_j + J_j J_i = -2 delta_ij I.
 *
 * The regular constructor validates to kCliffordTolerance and throws std::invalid_argument on
 * failure. `unchecked` skips validation; recovery uses it for candidate systems whose defects
 * are reported rather than enforced.
 */
class CliffordSystem {
 public:
  CliffordSystem() = default;
  CliffordSystem(std::size_t n, std::vector<Matrix> generators, double tol = kCliffordTolerance);

  static CliffordSystem unchecked(std::size_t n, std::vector<Matrix> generators);

  std::size_t n() const { return n_; }
  std::size_t nu() const { return generators_.size(); }
  const Matrix& generator(std::size_t i) const { return generators_.at(i); }
  const std::vector<Matrix>& generators() const { return generators_; }

 private:
  std::size_t n_ = 0;
  std::vector<Matrix> generators_;
};

CliffordDefects defects(std::size_t n, const std::vector<Matrix>& generators);
CliffordDefects validate(const CliffordSystem& sys);

/// Cl(8) on R^16 = O + O: J_p(a, b) = (b p, -a p*) for p running over e0..e7.
CliffordSystem make_rho8();
/// Cl(7) on R^16 = O + O: J_p(a, b) = (a p, b p) for p running over e1..e7.
CliffordSystem make_rho7();
/// First k generators. Throws std::out_of_range if k > nu.
CliffordSystem restrict_to(const CliffordSystem& sys, std::size_t k);

/// Orthogonal multiplication J_u X = sum_i u_i J_i X.
Vector j_u(const CliffordSystem& sys, std::span<const double> u, std::span<const double> x);

/// Orthonormal bases of JX = span(J_i X) and IX = span(X, J_i X). Throws on X = 0.
std::vector<Vector> span_jx(const CliffordSystem& sys, std::span<const double> x);
std::vector<Vector> span_ix(const CliffordSystem& sys, std::span<const double> x);

/// Ordered product J_{i1} ... J_{im} (indices 0-based).
Matrix ordered_product(const CliffordSystem& sys, std::span<const std::size_t> indices);

struct ParityEntry {
  std::vector<std::size_t> indices;  ///< increasing, 0-based
  bool symmetric = false;            ///< measured
  bool rule_symmetric = false;       ///< predicted: skew iff m = 1, 2 (mod 4)
};

struct ReprFingerprint {
  /// +1 / -1 when the product of all generators is +-I (to tol), empty otherwise ("not +-id").
  std::optional<int> product_sign;
  double product_distance_plus = 0.0;   ///< ||prod - I||_F
  double product_distance_minus = 0.0;  ///< ||prod + I||_F
  std::vector<ParityEntry> parity_table;

  bool parity_matches_rule() const;
  std::string product_label() const;
};

/// Parity of every increasing product of length 1..4 and the sign of the product of all
/// generators.
ReprFingerprint fingerprint(const CliffordSystem& sys, double tol = kCliffordTolerance);

}  // namespace curvlab
