#include "curvlab/io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>

namespace curvlab {

namespace {

constexpr char kMagic[8] = {'C', 'U', 'R', 'V', 'T', 'N', 'S', '1'};

[[noreturn]] void fail(const std::string& field, const std::string& msg) {
  throw SpecError("field '" + field + "': " + msg);
}

const json& require(const json& spec, const std::string& field) {
  if (!spec.contains(field)) fail(field, "missing");
  return spec.at(field);
}

double number(const json& spec, const std::string& field) {
  const json& v = require(spec, field);
  if (!v.is_number()) fail(field, "expected a number");
  return v.get<double>();
}

double number_or(const json& spec, const std::string& field, double fallback) {
  return spec.contains(field) ? number(spec, field) : fallback;
}

std::int64_t integer(const json& spec, const std::string& field) {
  const json& v = require(spec, field);
  if (!v.is_number_integer()) fail(field, "expected an integer");
  return v.get<std::int64_t>();
}

Vector numbers(const json& v, const std::string& field) {
  if (!v.is_array()) fail(field, "expected an array of numbers");
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number()) fail(field, "expected an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

Matrix rho_from(const json& v, std::size_t n) {
  if (v.is_number()) {
    Matrix m = Matrix::identity(n);
    m *= v.get<double>();
    return m;
  }
  if (v.is_object()) {
    if (!v.contains("diag")) fail("rho", "object form needs \"diag\"");
    const Vector d = numbers(v.at("diag"), "rho.diag");
    if (d.size() != n) fail("rho.diag", "expected " + std::to_string(n) + " entries");
    return Matrix::diagonal(d);
  }
  Matrix m = matrix_from_json(v, "rho");
  if (m.rows() != n || m.cols() != n) fail("rho", "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  if (symmetry_defect(m) > kSymmetryTolerance * std::max(1.0, max_abs(m))) fail("rho", "matrix is not symmetric");
  return m;
}

CliffordSystem system_from(const json& spec) {
  CliffordSystem sys;
  if (spec.contains("generators")) {
    const json& g = spec.at("generators");
    if (!g.is_array() || g.empty()) fail("generators", "expected a non-empty array of matrices");
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < g.size(); ++i) gens.push_back(matrix_from_json(g[i], "generators[" + std::to_string(i) + "]"));
    const std::size_t n = gens.front().rows();
    try {
      sys = CliffordSystem(n, std::move(gens));
    } catch (const std::invalid_argument& e) {
      fail("generators", e.what());
    }
  } else {
    const json& s = require(spec, "system");
    if (!s.is_string()) fail("system", "expected \"rho8\" or \"rho7\"");
    const std::string name = s.get<std::string>();
    if (name == "rho8") sys = make_rho8();
    else if (name == "rho7") sys = make_rho7();
    else fail("system", "unknown system \"" + name + "\" (expected rho8 or rho7)");
  }
  if (spec.contains("restrict")) {
    const std::int64_t k = integer(spec, "restrict");
    if (k < 0 || static_cast<std::size_t>(k) > sys.nu()) fail("restrict", "out of range 0.." + std::to_string(sys.nu()));
    sys = restrict_to(sys, static_cast<std::size_t>(k));
  }
  return sys;
}

int epsilon_from(const json& spec) {
  const std::int64_t e = spec.contains("epsilon") ? integer(spec, "epsilon") : 1;
  if (e != 1 && e != -1) fail("epsilon", "must be +1 or -1");
  return static_cast<int>(e);
}

std::size_t dimension(const json& spec, std::size_t fallback) {
  if (!spec.contains("n")) return fallback;
  const std::int64_t n = integer(spec, "n");
  if (n < 2 || n > 64) fail("n", "must be in 2..64");
  return static_cast<std::size_t>(n);
}

CurvatureTensor base_tensor(const json& spec, const std::filesystem::path& base_dir) {
  const json& k = require(spec, "kind");
  if (!k.is_string()) fail("kind", "expected a string");
  const std::string kind = k.get<std::string>();

  if (kind == "constant") return constant_curvature(dimension(spec, 16), number(spec, "lambda0"));
  if (kind == "cayley") return cayley_tensor();
  if (kind == "cayley_combination") return cayley_combination(number(spec, "a"), number(spec, "b"));
  if (kind == "weyl_cayley") return weyl_cayley(number(spec, "f"), epsilon_from(spec));
  if (kind == "cayley_rho") return cayley_with_rho(rho_from(require(spec, "rho"), 16), epsilon_from(spec), number_or(spec, "f", 1.0));
  if (kind == "clifford" || kind == "clifford_rho") {
    CliffordSystem sys = system_from(spec);
    const Vector eta = spec.contains("eta") ? numbers(spec.at("eta"), "eta") : Vector{};
    if (eta.size() != sys.nu()) fail("eta", "expected " + std::to_string(sys.nu()) + " values");
    if (kind == "clifford_rho") return clifford_with_rho(sys, rho_from(require(spec, "rho"), sys.n()), eta);
    const double l0 = number(spec, "lambda0");
    try {
      return clifford_tensor(CliffordSpec(std::move(sys), l0, eta));
    } catch (const std::invalid_argument& e) {
      fail("eta", e.what());
    }
  }
  if (kind == "dense") {
    CurvatureTensor r;
    if (spec.contains("file")) {
      const json& f = spec.at("file");
      if (!f.is_string()) fail("file", "expected a path");
      std::filesystem::path p = f.get<std::string>();
      if (p.is_relative()) p = base_dir / p;
      try {
        r = read_dense(p);
      } catch (const std::exception& e) {
        fail("file", e.what());
      }
      if (spec.contains("n") && dimension(spec, r.n()) != r.n()) fail("n", "does not match the binary file");
    } else {
      const std::size_t n = dimension(spec, 0);
      if (n == 0) fail("n", "missing");
      Vector c = numbers(require(spec, "components"), "components");
      if (c.size() != n * n * n * n) fail("components", "expected n^4 = " + std::to_string(n * n * n * n) + " numbers");
      r = CurvatureTensor(n, std::move(c));
    }
    const SymmetryReport s = validate_symmetries(r);
    if (!s.ok(1e-10 * std::max(1.0, max_abs(r))))
      fail(spec.contains("file") ? "file" : "components",
           "tensor violates curvature symmetries (max defect " + std::to_string(s.max()) + ")");
    return r;
  }
  fail("kind", "unknown kind \"" + kind + "\"");
}

}  // namespace

Matrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) fail(field, "expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) fail(field, "expected an array of rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Vector row = numbers(j[i], field);
    if (row.size() != cols) fail(field, "rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = row[c];
  }
  return m;
}

CurvatureTensor tensor_from_spec(const json& spec, const std::filesystem::path& base_dir) {
  if (!spec.is_object()) throw SpecError("top level: expected a JSON object");
  CurvatureTensor r;
  try {
    r = base_tensor(spec, base_dir);
  } catch (const SpecError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SpecError(std::string("invalid parameters: ") + e.what());
  }
  if (spec.contains("conjugate_seed")) {
    const std::int64_t s = integer(spec, "conjugate_seed");
    std::mt19937_64 rng(static_cast<std::uint64_t>(s));
    r = conjugate(r, random_orthogonal(r.n(), rng));
  }
  if (spec.contains("perturb")) {
    const json& p = spec.at("perturb");
    if (!p.is_object()) fail("perturb", "expected {\"magnitude\": m, \"seed\": s}");
    const double mag = number(p, "magnitude");
    const std::int64_t s = p.contains("seed") ? integer(p, "seed") : 0;
    std::mt19937_64 rng(static_cast<std::uint64_t>(s));
    CurvatureTensor noise = random_curvature_tensor(r.n(), rng);
    noise *= mag;
    r += noise;
  }
  return r;
}

CurvatureTensor load_tensor_spec(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  json spec;
  try {
    spec = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SpecError(file.string() + ": line " + std::to_string(line) + ", column " + std::to_string(col) +
                    ": JSON syntax error");
  }
  try {
    return tensor_from_spec(spec, file.parent_path());
  } catch (const SpecError& e) {
    throw SpecError(file.string() + ": " + e.what());
  }
}

void write_dense(const std::filesystem::path& file, const CurvatureTensor& r) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out.write(kMagic, 8);
  auto put = [&](std::uint64_t w) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((w >> (8 * i)) & 0xffu);
    out.write(b, 8);
  };
  put(r.n());
  for (double v : r.data()) put(std::bit_cast<std::uint64_t>(v));
  if (!out) throw std::runtime_error("write failed: " + file.string());
}

CurvatureTensor read_dense(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  char magic[8];
  if (!in.read(magic, 8) || !std::equal(magic, magic + 8, kMagic))
    throw std::runtime_error(file.string() + ": not a dense curvature tensor (bad magic)");
  auto get = [&]() {
    unsigned char b[8];
    if (!in.read(reinterpret_cast<char*>(b), 8)) throw std::runtime_error(file.string() + ": truncated");
    std::uint64_t w = 0;
    for (int i = 0; i < 8; ++i) w |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return w;
  };
  const std::uint64_t n = get();
  if (n < 1 || n > 64) throw std::runtime_error(file.string() + ": unsupported dimension " + std::to_string(n));
  std::vector<double> c(n * n * n * n);
  for (double& v : c) v = std::bit_cast<double>(get());
  return CurvatureTensor(n, std::move(c));
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

json to_json(const CliffordSystem& sys) {
  json gens = json::array();
  for (const auto& g : sys.generators()) gens.push_back(to_json(g));
  return {{"n", sys.n()}, {"nu", sys.nu()}, {"generators", gens}};
}

json to_json(const Spectrum& s) {
  return {{"eigenvalues", s.eigenvalues},
          {"multiplicities", s.multiplicities},
          {"cluster_tolerance", s.cluster_tolerance}};
}

json to_json(const StructureClass& c) {
  json labels = json::array();
  for (const auto& l : c.labels) labels.push_back(l.name());
  json out{{"primary", c.primary.name()}, {"labels", labels}};
  if (c.primary.kind == StructureKind::CliffordCompatible || c.primary.kind == StructureKind::CayleyCompatible) {
    out["lambda0"] = c.lambda0;
    out["eta"] = c.eta;
  }
  return out;
}

json to_json(const OssermanReport& r) {
  std::vector<int> pattern(r.spectrum.multiplicities.begin(), r.spectrum.multiplicities.end());
  std::sort(pattern.begin(), pattern.end());
  return {{"is_osserman", r.is_osserman},
          {"spectrum", to_json(r.spectrum)},
          {"multiplicity_pattern", pattern},
          {"max_deviation", r.max_deviation},
          {"relative_deviation", r.relative_deviation},
          {"spectral_radius", r.spectral_radius},
          {"samples", r.samples},
          {"tolerance", r.tolerance},
          {"seed", r.seed},
          {"structure_class", to_json(r.structure)}};
}

json to_json(const CliffordFit& fit, bool emit_matrices) {
  json out{{"nu", fit.system.nu()},
           {"lambda0", fit.lambda0},
           {"eta", fit.eta},
           {"eta_sorted", fit.sorted_eta()},
           {"residual", fit.residual},
           {"stage1_residual", fit.stage1_residual},
           {"constraint_violation", fit.constraint_violation},
           {"iterations", fit.iterations},
           {"restarts", fit.restarts},
           {"best_restart", fit.best_restart},
           {"feasible", fit.feasible},
           {"eta_zero_rejected", fit.eta_zero_rejected},
           {"success", fit.success},
           {"verdict", fit.verdict.name()},
           {"note", fit.note}};
  if (emit_matrices) out["system"] = to_json(fit.system);
  return out;
}

json to_json(const CayleyFit& fit) {
  return {{"available", fit.available}, {"a", fit.a}, {"b", fit.b}, {"residual", fit.residual}};
}

json to_json(const ProbeReport& rep, bool emit_matrices) {
  json fits = json::array();
  for (const auto& f : rep.fits) fits.push_back(to_json(f, emit_matrices));
  return {{"osserman", to_json(rep.osserman)},
          {"clifford_fits", fits},
          {"cayley_fit", to_json(rep.cayley)},
          {"verdict", rep.verdict}};
}

}  // namespace curvlab
