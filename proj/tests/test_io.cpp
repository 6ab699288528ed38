#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>

#include "curvlab/io.hpp"

using namespace curvlab;
namespace fs = std::filesystem;

namespace {

fs::path temp_path(const std::string& name) { return fs::temp_directory_path() / ("curvlab_test_" + name); }

void write_text(const fs::path& p, const std::string& s) { std::ofstream(p, std::ios::binary) << s; }

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("spec kinds") {
  CHECK(max_abs(tensor_from_spec(json{{"kind", "cayley"}}) - cayley_tensor()) == 0.0);
  CHECK(max_abs(tensor_from_spec(json{{"kind", "constant"}, {"n", 5}, {"lambda0", 2.0}}) - constant_curvature(5, 2.0)) ==
        0.0);
  CHECK(max_abs(tensor_from_spec(json{{"kind", "cayley_combination"}, {"a", 2.0}, {"b", 1.0}}) -
                cayley_combination(2.0, 1.0)) == 0.0);
  CHECK(max_abs(tensor_from_spec(json{{"kind", "weyl_cayley"}, {"f", 2.0}, {"epsilon", -1}}) - weyl_cayley(2.0, -1)) ==
        0.0);
  const json cl = {{"kind", "clifford"}, {"system", "rho8"}, {"restrict", 2}, {"lambda0", 1.0}, {"eta", {0.5, 2.0}}};
  const Vector eta{0.5, 2.0};
  CHECK(max_abs(tensor_from_spec(cl) - clifford_tensor(CliffordSpec(restrict_to(make_rho8(), 2), 1.0, eta))) == 0.0);
  const json cr = {{"kind", "clifford_rho"}, {"system", "rho7"}, {"restrict", 1}, {"rho", 0.5}, {"eta", {1.0}}};
  const Vector e1{1.0};
  CHECK(max_abs(tensor_from_spec(cr) - clifford_tensor(CliffordSpec(restrict_to(make_rho7(), 1), 1.0, e1))) < 1e-15);
  Vector d(16, 1.0);
  d[3] = 2.0;
  const json ry = {{"kind", "cayley_rho"}, {"rho", {{"diag", d}}}, {"f", 1.5}};
  CHECK(max_abs(tensor_from_spec(ry) - cayley_with_rho(Matrix::diagonal(d), 1, 1.5)) == 0.0);
  const json gens = {{"kind", "clifford"},
                     {"generators", json::array({to_json(make_rho7().generator(0))})},
                     {"lambda0", 1.0},
                     {"eta", {3.0}}};
  CHECK(max_abs(tensor_from_spec(gens) - tensor_from_spec({{"kind", "clifford"},
                                                           {"system", "rho7"},
                                                           {"restrict", 1},
                                                           {"lambda0", 1.0},
                                                           {"eta", {3.0}}})) == 0.0);
}

TEST_CASE("conjugation and perturbation are seeded") {
  const json a = {{"kind", "cayley"}, {"conjugate_seed", 4}};
  CHECK(max_abs(tensor_from_spec(a) - tensor_from_spec(a)) == 0.0);
  CHECK(max_abs(tensor_from_spec(a) - cayley_tensor()) > 0.1);
  const json p = {{"kind", "cayley"}, {"perturb", {{"magnitude", 0.01}, {"seed", 2}}}};
  const double m = max_abs(tensor_from_spec(p) - cayley_tensor());
  CHECK(m == doctest::Approx(0.01));
}

TEST_CASE("semantic errors name the field") {
  CHECK(error_of([] { tensor_from_spec(json{{"kind", "nope"}}); }).find("field 'kind'") != std::string::npos);
  CHECK(error_of([] { tensor_from_spec(json{{"kind", "constant"}}); }).find("field 'lambda0'") != std::string::npos);
  CHECK(error_of([] {
          tensor_from_spec(json{{"kind", "clifford"}, {"system", "rho8"}, {"lambda0", 1.0}, {"eta", {1.0}}});
        }).find("field 'eta'") != std::string::npos);
  CHECK(error_of([] {
          tensor_from_spec(json{{"kind", "clifford"}, {"system", "rho8"}, {"restrict", 1}, {"lambda0", 1.0}, {"eta", {0.0}}});
        }).find("field 'eta'") != std::string::npos);
  CHECK(error_of([] { tensor_from_spec(json{{"kind", "weyl_cayley"}, {"f", 1.0}, {"epsilon", 3}}); })
            .find("field 'epsilon'") != std::string::npos);
  json dense = {{"kind", "dense"}, {"n", 2}, {"components", std::vector<double>(16, 0.0)}};
  dense["components"][1] = 1.0;
  CHECK(error_of([&] { tensor_from_spec(dense); }).find("symmetries") != std::string::npos);
  CHECK_THROWS_AS(tensor_from_spec(json::array()), SpecError);
}

TEST_CASE("syntax errors carry line and column") {
  const fs::path p = temp_path("bad.json");
  write_text(p, "{\n  \"kind\": \"cayley\",\n  oops\n}\n");
  const std::string msg = error_of([&] { load_tensor_spec(p); });
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK(msg.find("column") != std::string::npos);
  CHECK_THROWS_AS(load_tensor_spec(temp_path("missing.json")), std::runtime_error);
  fs::remove(p);
}

TEST_CASE("dense binary round trip is lossless") {
  std::mt19937_64 rng(7);
  const CurvatureTensor r = random_curvature_tensor(6, rng);
  const fs::path p = temp_path("r.bin");
  write_dense(p, r);
  CHECK(fs::file_size(p) == 16 + 8 * 1296);
  std::ifstream in(p, std::ios::binary);
  char magic[8];
  in.read(magic, 8);
  CHECK(std::memcmp(magic, "CURVTNS1", 8) == 0);
  const CurvatureTensor back = read_dense(p);
  CHECK(std::memcmp(back.data().data(), r.data().data(), r.size() * sizeof(double)) == 0);

  const fs::path spec = temp_path("dense.json");
  write_text(spec, "{\"kind\": \"dense\", \"file\": \"" + p.filename().string() + "\"}");
  CHECK(max_abs(load_tensor_spec(spec) - r) == 0.0);

  write_text(p, "NOTMAGIC");
  CHECK_THROWS(read_dense(p));
  fs::remove(p);
  fs::remove(spec);
}

TEST_CASE("json reports") {
  const json m = to_json(Matrix::identity(2));
  CHECK(m.dump() == "[[1.0,0.0],[0.0,1.0]]");
  CHECK(max_abs_diff(matrix_from_json(m, "m"), Matrix::identity(2)) == 0.0);
  const json rep = to_json(osserman_check(cayley_tensor()));
  CHECK(rep.at("is_osserman") == true);
  CHECK(rep.at("multiplicity_pattern") == json::array({7, 8}));
  CHECK(rep.at("structure_class").at("primary") == "CayleyCompatible");
  // keys are emitted sorted
  std::string prev;
  for (const auto& [k, v] : rep.items()) {
    CHECK(prev < k);
    prev = k;
  }
  CliffordFit fit;
  fit.system = make_rho7();
  const json with = to_json(fit, true), without = to_json(fit, false);
  CHECK(with.contains("system"));
  CHECK_FALSE(without.contains("system"));
}
