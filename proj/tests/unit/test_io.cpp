#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "krzyz/errors.hpp"
#include "krzyz/io.hpp"
#include "support.hpp"

using namespace krzyz;
using namespace krzyz::testing;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  auto dir = fs::temp_directory_path() / "krzyz_io_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config round trip") {
  std::mt19937_64 rng(137);
  for (int i = 0; i < 20; ++i) {
    const auto cfg = random_config(rng, 1 + i % 5);
    CHECK(io::config_from_json(io::to_json(cfg)) == cfg);
  }
  const auto path = scratch_dir() / "cfg.json";
  io::write_text(path, io::dump(io::to_json(reference_config(3))));
  CHECK(io::load_config(path) == reference_config(3));
}

TEST_CASE("config diagnostics name the field") {
  using io::json;
  CHECK_THROWS_WITH_AS(io::config_from_json(json{{"atoms", json::array()}}), "n: missing", ValidationError);
  CHECK_THROWS_WITH_AS(io::config_from_json(json{{"n", 1.5}, {"atoms", json::array()}}), "n: expected integer",
                       ValidationError);
  CHECK_THROWS_WITH_AS(
      io::config_from_json(json{{"n", 2}, {"atoms", json::array({json{{"theta", 0.0}, {"lambda", "x"}}})}}),
      "atoms[0].lambda: expected number", ValidationError);
  CHECK_THROWS_WITH_AS(io::config_from_json(json{{"n", 2}, {"atoms", json::array({json{{"lambda", 1.0}}})}}),
                       "atoms[0].theta: missing", ValidationError);
  CHECK_THROWS_AS(io::config_from_json(json{{"n", 2}, {"atoms", json::array()}}), ValidationError);

  const auto bad = scratch_dir() / "bad.json";
  io::write_text(bad, "{\n  \"n\": 2,\n  \"atoms\": [ }\n");
  CHECK_THROWS_WITH_AS(io::load_config(bad), doctest::Contains("line 3"), ValidationError);
  CHECK_THROWS_AS(io::load_config(scratch_dir() / "missing.json"), ValidationError);
}

TEST_CASE("csv tables") {
  const auto csv = io::coefficients_csv(reference_config(2), 4);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "j,a_re,a_im,b_re,b_im,fg_re,fg_im");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  REQUIRE(rows.size() == 5);
  CHECK(std::stod(rows[2].substr(2)) == doctest::Approx(kTwoOverE));

  const auto zero = io::coefficients_csv(reference_config(3), 0);
  CHECK(zero == "j,a_re,a_im,b_re,b_im,fg_re,fg_im\n0," + std::string("0.36787944117144233,0,-1,0,-0.36787944117144233,0\n"));

  CHECK(io::series_csv(PowerSeries({1.0, cplx(0.0, 2.0)})) == "j,re,im\n0,1,0\n1,0,2\n");
  CHECK(io::beta_table_csv({beta_sup(2)}).rfind("j,t_star,sup_value,rooney_bound\n2,2.61803398", 0) == 0);
  SweepRow row;
  row.N = 1;
  row.best_value = 0.5;
  row.starts = 3;
  CHECK(io::sweep_csv({row}) == "N,best_value,grad_norm,starts\n1,0.5,0,3\n");
}

TEST_CASE("report shapes") {
  const auto p = io::to_json(ComplexPoly({1.0, cplx(0.0, 2.0)}));
  CHECK(p["coeffs"][1][1] == 2.0);
  CHECK(io::poly_from_json(p).degree() == 1);
  CHECK_THROWS_AS(io::poly_from_json(io::json{{"coeffs", io::json::array({1.0})}}), ValidationError);

  const auto fr = io::to_json(fejer_riesz(TrigPolyReal(2.0, {1.0})));
  CHECK(fr.contains("scale"));
  CHECK(fr.contains("roots"));
  CHECK(fr.contains("sup_error"));

  const auto cfg = reference_config(2);
  const auto c = theorem1_constant(4.0 / 3.0);
  const auto audit = io::audit_json(ermers_audit(cfg, 2, c.k1, c.k2), vdc_audit(cfg, 2, c.k1), c);
  for (const char* key : {"K1", "K2", "ermers_slack", "vdc", "c"}) CHECK(audit.contains(key));
  CHECK(audit["vdc"][0].contains("arc"));

  const auto inv = io::invariants_json({0.0, 3.14}, 1, {2, true}, {true, true, true, true, false});
  CHECK(inv["conditions"]["5"] == false);
  CHECK(inv["orbit_count"] == 1);

  const auto rep = io::to_json(rep_zero_match(cfg));
  for (const char* key : {"points", "product_check", "a_n_formula", "match", "sup_coeff_error"}) {
    CHECK(rep.contains(key));
  }

  const auto res = io::to_json(maximize(1, 1, 2, 5));
  for (const char* key : {"n", "value", "config", "grad_norm", "stationarity", "starts", "seed"}) {
    CHECK(res.contains(key));
  }
  CHECK(res["seed"] == 5);
}

TEST_CASE("manifest beside the output") {
  const auto out = scratch_dir() / "sub" / "result.json";
  io::write_text(out, "{}\n");
  io::RunManifest m;
  m.command = "optimize";
  m.seed = 42;
  m.outputs = {out.string()};
  const auto path = io::write_manifest(out, m);
  CHECK(path.filename() == "result.json.manifest.json");
  const auto j = io::json::parse(slurp(path));
  CHECK(j["command"] == "optimize");
  CHECK(j["seed"] == 42);
  CHECK_FALSE(j["timestamp"].get<std::string>().empty());
}
