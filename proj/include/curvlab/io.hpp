#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "curvlab/clifford.hpp"
#include "curvlab/curvature.hpp"
#include "curvlab/osserman.hpp"
#include "curvlab/recovery.hpp"

namespace curvlab {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

/// Malformed tensor spec: message carries "line L, column C" for JSON syntax errors and the
/// offending field name for semantic errors.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Build the tensor described by a spec document. `base_dir` resolves relative "file" paths of
/// dense specs. Throws SpecError.
///
/// Kinds and fields:
///   constant            n (16), lambda0
///   clifford            system ("rho8" | "rho7") or generators, restrict, lambda0, eta
///   cayley              -
///   cayley_combination  a, b
///   clifford_rho        system or generators, restrict, rho, eta
///   cayley_rho          rho, epsilon, f
///   weyl_cayley         f, epsilon
///   dense               n, components (n^4 numbers) or file (binary)
/// rho is an n x n array of rows, {"diag": [...]}, or a number c meaning c id.
/// Optional for every kind: "conjugate_seed" (random orthogonal conjugation, applied first) and
/// "perturb": {"magnitude", "seed"} (adds magnitude times a random curvature tensor of max
/// component 1).
CurvatureTensor tensor_from_spec(const json& spec, const std::filesystem::path& base_dir = ".");

/// Reads and parses a spec file. Throws SpecError (with the file name) or std::runtime_error on I/O.
CurvatureTensor load_tensor_spec(const std::filesystem::path& file);

/// Flat little-endian binary: 8-byte magic "CURVTNS1", uint64 n, then n^4 float64.
void write_dense(const std::filesystem::path& file, const CurvatureTensor& r);
CurvatureTensor read_dense(const std::filesystem::path& file);

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const std::string& field);
json to_json(const CliffordSystem& sys);
json to_json(const Spectrum& s);
json to_json(const StructureClass& c);
json to_json(const OssermanReport& r);
json to_json(const CliffordFit& fit, bool emit_matrices);
json to_json(const CayleyFit& fit);
json to_json(const ProbeReport& rep, bool emit_matrices);

}  // namespace curvlab
