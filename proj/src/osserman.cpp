#include "curvlab/osserman.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "curvlab/kernels.hpp"

namespace curvlab {

std::string StructureLabel::name() const {
  switch (kind) {
    case StructureKind::Flat: return "Flat";
    case StructureKind::ConstantCurvature: return "ConstantCurvature";
    case StructureKind::CliffordCompatible: return "CliffordCompatible(" + std::to_string(nu) + ")";
    case StructureKind::CayleyCompatible: return "CayleyCompatible";
    case StructureKind::Unknown: return "Unknown";
    case StructureKind::NotOsserman: return "NotOsserman";
  }
  return "Unknown";
}

bool StructureClass::has(const StructureLabel& l) const {
  return std::find(labels.begin(), labels.end(), l) != labels.end();
}

std::vector<Vector> sample_directions(std::size_t n, int samples, std::uint64_t seed) {
  if (samples < 2) throw std::invalid_argument("osserman_check: samples must be at least 2");
  std::vector<Vector> dirs;
  const auto total = static_cast<std::size_t>(samples);
  for (std::size_t i = 0; i < n && dirs.size() < total; ++i) dirs.push_back(unit_vector(n, i));
  std::mt19937_64 rng(seed);
  while (dirs.size() < total) dirs.push_back(random_unit(n, rng));
  return dirs;
}

StructureClass classify_spectrum(const Spectrum& s, std::size_t n, double flat_tol) {
  StructureClass c;
  double radius = 0.0;
  for (double v : s.raw) radius = std::max(radius, std::abs(v));
  if (radius <= flat_tol) {
    c.primary = {StructureKind::Flat, 0};
    c.labels = {c.primary};
    return c;
  }

  // lambda0: most multiple, ties toward the smaller eigenvalue.
  std::size_t c0 = 0;
  for (std::size_t k = 1; k < s.eigenvalues.size(); ++k)
    if (s.multiplicities[k] > s.multiplicities[c0]) c0 = k;
  c.lambda0 = s.eigenvalues[c0];

  if (s.eigenvalues.size() == 1) {
    c.primary = {StructureKind::ConstantCurvature, 0};
    c.labels = {c.primary};
    return c;
  }

  auto eta_for = [&](std::size_t lam) {
    Vector eta;
    for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
      if (k == lam) continue;
      for (int m = 0; m < s.multiplicities[k]; ++m) eta.push_back((s.eigenvalues[k] - s.eigenvalues[lam]) / 3.0);
    }
    std::sort(eta.begin(), eta.end());
    return eta;
  };

  const int dim = static_cast<int>(n) - 1;
  std::vector<int> admissible;
  for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
    const int nu = dim - s.multiplicities[k];
    if (nu >= 1 && nu <= 8 && std::find(admissible.begin(), admissible.end(), nu) == admissible.end())
      admissible.push_back(nu);
  }
  std::sort(admissible.begin(), admissible.end());

  std::vector<int> pattern(s.multiplicities.begin(), s.multiplicities.end());
  std::sort(pattern.begin(), pattern.end());
  const bool cayley = n == 16 && pattern == std::vector<int>{7, 8};

  if (cayley) c.labels.push_back({StructureKind::CayleyCompatible, 0});
  for (int nu : admissible) c.labels.push_back({StructureKind::CliffordCompatible, nu});

  if (cayley) {
    c.primary = {StructureKind::CayleyCompatible, 0};
  } else if (!admissible.empty()) {
    // Prefer the most-multiple cluster as lambda0 when it is admissible.
    int nu0 = dim - s.multiplicities[c0];
    if (std::find(admissible.begin(), admissible.end(), nu0) == admissible.end()) {
      nu0 = admissible.front();
      for (std::size_t k = 0; k < s.eigenvalues.size(); ++k)
        if (dim - s.multiplicities[k] == nu0) {
          c0 = k;
          break;
        }
      c.lambda0 = s.eigenvalues[c0];
    }
    c.primary = {StructureKind::CliffordCompatible, nu0};
  } else {
    c.primary = {StructureKind::Unknown, 0};
    c.labels.push_back(c.primary);
  }
  c.eta = eta_for(c0);
  return c;
}

OssermanReport osserman_check(const CurvatureTensor& r, int samples, double tol, std::uint64_t seed) {
  const std::size_t n = r.n();
  if (n < 2) throw std::invalid_argument("osserman_check: tensor dimension must be at least 2");
  const std::vector<Vector> dirs = sample_directions(n, samples, seed);
  const std::vector<Vector> spectra = kernels::reduced_spectra(n, r.data(), dirs);

  OssermanReport rep;
  rep.samples = samples;
  rep.tolerance = tol;
  rep.seed = seed;

  const Matrix b = complement_basis(dirs.front());
  rep.spectrum = sym_eig(sym_part(b.transpose() * jacobi(r, dirs.front()) * b), kSpectralTolerance);
  for (double v : spectra.front()) rep.spectral_radius = std::max(rep.spectral_radius, std::abs(v));

  for (std::size_t d = 1; d < spectra.size(); ++d)
    for (std::size_t k = 0; k < spectra[d].size(); ++k)
      rep.max_deviation = std::max(rep.max_deviation, std::abs(spectra[d][k] - spectra.front()[k]));
  double overall = 0.0;
  for (const auto& sp : spectra)
    for (double v : sp) overall = std::max(overall, std::abs(v));
  if (overall <= kFlatTolerance)
    rep.relative_deviation = 0.0;
  else
    rep.relative_deviation = rep.max_deviation / std::max(rep.spectral_radius, kFlatTolerance);
  rep.is_osserman = rep.relative_deviation <= tol;

  if (rep.is_osserman) {
    rep.structure = classify_spectrum(rep.spectrum, n);
  } else {
    rep.structure.primary = {StructureKind::NotOsserman, 0};
    rep.structure.labels = {rep.structure.primary};
  }
  return rep;
}

std::vector<int> multiplicity_pattern(const CurvatureTensor& r, double tol) {
  const OssermanReport rep = osserman_check(r, kDefaultSamples, tol, 0);
  if (!rep.is_osserman) throw std::domain_error("multiplicity_pattern: tensor is not Osserman");
  std::vector<int> m(rep.spectrum.multiplicities.begin(), rep.spectrum.multiplicities.end());
  std::sort(m.begin(), m.end());
  return m;
}

StructureClass classify_structure(const CurvatureTensor& r, double tol) {
  return osserman_check(r, kDefaultSamples, tol, 0).structure;
}

OssermanReport conformally_osserman_check(const CurvatureTensor& r, int samples, double tol, std::uint64_t seed) {
  return osserman_check(weyl(r), samples, tol, seed);
}

}  // namespace curvlab
