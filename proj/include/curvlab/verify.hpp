#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvlab/io.hpp"

namespace curvlab {

struct Check {
  std::string name;
  std::string anchor;  ///< identity being checked, as formula text
  json measured;
  json expected;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool pass() const;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  double tol = 1e-10;       ///< construction tolerance
  int draws = 10000;        ///< random draws for the octonion identities
  int spin9_draws = 1000;   ///< random draws for the Spin(9) identities
};

/// "octonion", "clifford", "spin9", "curvature", in report order.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options);

json to_json(const Check& c);
json to_json(const SuiteReport& s);
/// Full report: suites in the order given, global pass flag, seed, tolerance and version.
json verify_report(const std::vector<SuiteReport>& suites, const VerifyOptions& options);

}  // namespace curvlab
