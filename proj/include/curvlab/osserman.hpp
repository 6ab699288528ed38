#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvlab/curvature.hpp"
#include "curvlab/linalg.hpp"

namespace curvlab {

enum class StructureKind { Flat, ConstantCurvature, CliffordCompatible, CayleyCompatible, Unknown, NotOsserman };

struct StructureLabel {
  StructureKind kind = StructureKind::Unknown;
  int nu = 0;  ///< only for CliffordCompatible

  std::string name() const;  ///< e.g. "CliffordCompatible(8)"
  friend bool operator==(const StructureLabel&, const StructureLabel&) = default;
};

/// Spectral classification. `primary` is the preferred label; `labels` lists every label the
/// spectrum admits (a {7, 8} pattern is Cayley-compatible and Clifford-compatible with nu = 7
/// and nu = 8 at once). For Clifford-type spectra, lambda0 is the most-multiple reduced
/// eigenvalue (ties toward the smaller value) and eta = (mu - lambda0)/3 over the remaining
/// eigenvalues, repeated by multiplicity, ascending.
struct StructureClass {
  StructureLabel primary;
  std::vector<StructureLabel> labels;
  double lambda0 = 0.0;
  Vector eta;

  bool has(const StructureLabel& l) const;
};

struct OssermanReport {
  bool is_osserman = false;
  Spectrum spectrum;              ///< reduced Jacobi operator at the first sampled direction (e_0)
  double max_deviation = 0.0;     ///< largest |sorted eigenvalue difference| across directions
  double spectral_radius = 0.0;   ///< max |eigenvalue| at the reference direction
  double relative_deviation = 0.0;///< max_deviation / spectral_radius (or max_deviation if radius is 0)
  int samples = 0;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  StructureClass structure;
};

inline constexpr int kDefaultSamples = 64;
inline constexpr double kSpectralTolerance = 1e-7;
/// Tensors whose sampled Jacobi eigenvalues all stay below this are treated as flat.
inline constexpr double kFlatTolerance = 1e-12;

/// `samples` directions: the coordinate axes first, then seeded uniform random unit vectors.
/// Throws std::invalid_argument for samples < 2.
std::vector<Vector> sample_directions(std::size_t n, int samples, std::uint64_t seed);

/// Compares reduced Jacobi spectra on X^perp across sampled unit directions. is_osserman
/// holds iff relative_deviation <= tol; a tensor whose sampled spectra vanish to
/// kFlatTolerance has relative_deviation 0.
OssermanReport osserman_check(const CurvatureTensor& r, int samples = kDefaultSamples,
                              double tol = kSpectralTolerance, std::uint64_t seed = 0);

/// Classification of a spectrum already known to be Osserman.
StructureClass classify_spectrum(const Spectrum& reduced, std::size_t n, double flat_tol = kFlatTolerance);

/// Multiplicities of the reduced Jacobi operator, ascending. Throws std::domain_error if R is
/// not Osserman at tol.
std::vector<int> multiplicity_pattern(const CurvatureTensor& r, double tol = kSpectralTolerance);

/// osserman_check with the default sampling, reduced to its structure class.
StructureClass classify_structure(const CurvatureTensor& r, double tol = kSpectralTolerance);

/// osserman_check applied to the Weyl tensor. Throws for n < 4.
OssermanReport conformally_osserman_check(const CurvatureTensor& r, int samples = kDefaultSamples,
                                          double tol = kSpectralTolerance, std::uint64_t seed = 0);

}  // namespace curvlab
