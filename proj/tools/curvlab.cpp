#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "curvlab/io.hpp"
#include "curvlab/octonion.hpp"
#include "curvlab/spin9.hpp"
#include "curvlab/verify.hpp"

using namespace curvlab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CURVLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "curvlab: ignoring malformed CURVLAB_SEED='" << env << "'\n";
    }
  }
  return 42;
}

// Writes to PATH, or stdout for "-" or an empty path.
void emit(const json& doc, const std::string& path) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

void print_table() {
  std::cout << "octonion multiplication table (row * column)\n     ";
  for (int j = 0; j < 8; ++j) std::cout << std::setw(5) << ("e" + std::to_string(j));
  std::cout << "\n";
  for (std::size_t i = 0; i < 8; ++i) {
    std::cout << std::setw(5) << ("e" + std::to_string(i));
    for (std::size_t j = 0; j < 8; ++j) {
      const BasisProduct p = kOctonionTable[i][j];
      std::cout << std::setw(5) << ((p.sign > 0 ? "+e" : "-e") + std::to_string(p.index));
    }
    std::cout << "\n";
  }
  const int sign = product_sign(make_spin9());
  std::cout << "S_0 S_1 ... S_8 = " << (sign > 0 ? "+id" : sign < 0 ? "-id" : "not +-id") << "\n";
}

json table_json() {
  json rows = json::array();
  for (const auto& row : kOctonionTable) {
    json r = json::array();
    for (const auto& p : row) r.push_back({{"sign", p.sign}, {"index", p.index}});
    rows.push_back(r);
  }
  return {{"table", rows}, {"spin9_product_sign", product_sign(make_spin9())}, {"version", kVersion}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Osserman curvature tensor toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  const std::uint64_t seed0 = default_seed();

  // verify
  std::string suite = "all";
  std::uint64_t v_seed = seed0;
  double v_tol = 1e-10;
  std::string v_json;
  auto* verify = app.add_subcommand("verify", "Run the algebraic verification suites");
  verify->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"octonion", "clifford", "spin9", "curvature", "all"}));
  verify->add_option("--seed", v_seed, "Random seed (default: $CURVLAB_SEED or 42)");
  verify->add_option("--tol", v_tol, "Construction tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--json", v_json, "Report path ('-' for stdout)");

  // spectrum
  std::string s_tensor, s_json;
  int s_samples = kDefaultSamples;
  double s_tol = kSpectralTolerance;
  std::uint64_t s_seed = seed0;
  auto* spectrum = app.add_subcommand("spectrum", "Osserman check and spectral classification");
  spectrum->add_option("--tensor", s_tensor, "Tensor spec file")->required();
  spectrum->add_option("--samples", s_samples, "Sampled directions")->check(CLI::Range(2, 1 << 20));
  spectrum->add_option("--tol", s_tol, "Relative spectral tolerance")->check(CLI::PositiveNumber);
  spectrum->add_option("--seed", s_seed, "Random seed");
  spectrum->add_option("--json", s_json, "Report path ('-' for stdout)");

  // recover
  std::string r_tensor, r_json;
  RecoveryConfig rc;
  rc.seed = seed0;
  bool r_emit = false;
  auto* recover = app.add_subcommand("recover", "Fit a Clifford structure");
  recover->add_option("--tensor", r_tensor, "Tensor spec file")->required();
  recover->add_option("--nu", rc.nu, "Number of Clifford generators")->check(CLI::Range(1, 8));
  recover->add_option("--restarts", rc.restarts, "Restarts")->check(CLI::Range(1, 1024));
  recover->add_option("--iterations", rc.max_iterations, "Gauss-Newton iterations per restart")
      ->check(CLI::Range(0, 10000));
  recover->add_option("--seed", rc.seed, "Random seed");
  recover->add_option("--tol", rc.fit_tolerance, "Fit tolerance")->check(CLI::PositiveNumber);
  recover->add_option("--json", r_json, "Report path ('-' for stdout)");
  recover->add_flag("--emit-matrices", r_emit, "Include fitted generators");

  // probe
  std::string p_tensor, p_json;
  ProbeConfig pc;
  pc.seed = seed0;
  bool p_emit = false;
  auto* probe = app.add_subcommand("probe", "Osserman check, classification, Clifford and Cayley fits");
  probe->add_option("--tensor", p_tensor, "Tensor spec file")->required();
  probe->add_option("--samples", pc.samples, "Sampled directions")->check(CLI::Range(2, 1 << 20));
  probe->add_option("--restarts", pc.restarts, "Restarts per nu")->check(CLI::Range(1, 1024));
  probe->add_option("--seed", pc.seed, "Random seed");
  probe->add_option("--json", p_json, "Report path ('-' for stdout)");
  probe->add_flag("--emit-matrices", p_emit, "Include fitted generators");

  // export
  std::string e_tensor, e_out;
  auto* exp = app.add_subcommand("export", "Write a spec's tensor as a dense binary file");
  exp->add_option("--tensor", e_tensor, "Tensor spec file")->required();
  exp->add_option("--out", e_out, "Output file")->required();

  // dump-table
  bool d_json = false;
  auto* dump = app.add_subcommand("dump-table", "Print the octonion table and the Spin(9) product sign");
  dump->add_flag("--json", d_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc_parse = app.exit(e);
    return rc_parse == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) {
      VerifyOptions opts;
      opts.seed = v_seed;
      opts.tol = v_tol;
      std::vector<SuiteReport> reports;
      for (const auto& name : suite_names())
        if (suite == "all" || suite == name) reports.push_back(run_suite(name, opts));
      const json doc = verify_report(reports, opts);
      bool pass = true;
      for (const auto& rep : reports) {
        for (const auto& c : rep.checks)
          std::cerr << (c.pass ? "PASS " : "FAIL ") << rep.suite << ": " << c.name << "\n";
        pass = pass && rep.pass();
      }
      emit(doc, v_json);
      return pass ? kExitPass : kExitFail;
    }
    if (*spectrum) {
      const CurvatureTensor r = load_tensor_spec(s_tensor);
      emit(to_json(osserman_check(r, s_samples, s_tol, s_seed)), s_json);
      return kExitPass;
    }
    if (*recover) {
      rc.validate();
      const CurvatureTensor r = load_tensor_spec(r_tensor);
      emit(to_json(reconstruct(r, rc), r_emit), r_json);
      return kExitPass;
    }
    if (*probe) {
      const CurvatureTensor r = load_tensor_spec(p_tensor);
      emit(to_json(conjecture_a_probe(r, pc), p_emit), p_json);
      return kExitPass;
    }
    if (*exp) {
      write_dense(e_out, load_tensor_spec(e_tensor));
      return kExitPass;
    }
    if (*dump) {
      if (d_json)
        emit(table_json(), "");
      else
        print_table();
      return kExitPass;
    }
  } catch (const std::exception& e) {
    std::cerr << "curvlab: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
