#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "lieframe/cli.hpp"
#include "lieframe/report.hpp"

#include <nlohmann/json.hpp>

using namespace lieframe;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("list prints every catalog key") {
  const auto r = run({"list"});
  CHECK(r.code == 0);
  for (const auto& key : catalog_keys())
    CHECK(r.out.find(key) != std::string::npos);
  CHECK(r.out.find("aliases:") != std::string::npos);
}

TEST_CASE("show prints constants and frame expressions") {
  const auto r = run({"show", "Bianchi_VI_h", "--param", "h=-1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("C^1_{13} = 1") != std::string::npos);
  CHECK(r.out.find("C^2_{23} = -1") != std::string::npos);
  CHECK(r.out.find("(exp z)") != std::string::npos);
}

TEST_CASE("check validates catalog keys and JSON files") {
  CHECK(run({"check", "Bianchi_IX"}).code == 0);

  // The inconsistent table from the validation example, via a JSON file.
  nlohmann::json j{
      {"dim", 3},
      {"name", "broken"},
      {"constants",
       {{{"mu", 3}, {"kappa", 1}, {"lambda", 2}, {"value", "1"}},
        {{"mu", 1}, {"kappa", 1}, {"lambda", 3}, {"value", "1"}}}}};
  const std::string path = "/tmp/lieframe_broken.json";
  std::ofstream(path) << j.dump();
  const auto r = run({"check", "--file", path});
  CHECK(r.code == 1);
  CHECK(r.err.find("Jacobi") != std::string::npos);
  CHECK(r.err.find("(") != std::string::npos);  // violating indices named
}

TEST_CASE("compose of the abelian plane adds coordinates") {
  const auto r = run({"compose", "2A1", "--a", "1,2", "--b", "3,4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("4") != std::string::npos);
  CHECK(r.out.find("6") != std::string::npos);
  CHECK(r.out.find("residual = 0.000e+00") != std::string::npos);
}

TEST_CASE("represent --json round-trips through the documented schema") {
  const auto r = run({"represent", "A4,10", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("rep_dim") == 6);
  CHECK(j.at("matrices").size() == 4);
  CHECK(j.at("matrices")[0][0][1] == "1");  // Omega_1 = e_{1,2}
  CHECK(j.at("basis_labels").size() == 6);
}

TEST_CASE("exp and frames run on a 4d entry") {
  CHECK(run({"exp", "A4,2", "--param", "alpha=2", "--coords", "1/4,0,0,1/2"})
            .code == 0);
  const auto r = run({"frames", "Bianchi_V", "--point", "0,0,0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sigma") != std::string::npos);
}

TEST_CASE("verify reports a pass for a single algebra") {
  const auto r = run({"verify", "A4,10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("=> PASS") != std::string::npos);
  CHECK(r.out.find("closed_form") != std::string::npos);
}

TEST_CASE("bad input yields exit code 2 with the failing item named") {
  CHECK(run({"verify"}).code == 2);
  const auto r = run({"show", "A3,5+A1", "--param", "alpha=2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("A3,5+A1") != std::string::npos);
  CHECK(run({"represent", "not_an_algebra"}).code == 2);
  CHECK(run({"compose", "2A1", "--a", "1,2", "--b", "1"}).code == 2);
}

TEST_CASE("report emits the machine-readable record deterministically") {
  const auto r1 = run({"report", "Bianchi_II", "--seed", "5"});
  const auto r2 = run({"report", "Bianchi_II", "--seed", "5"});
  CHECK(r1.code == 0);
  auto j1 = nlohmann::json::parse(r1.out);
  auto j2 = nlohmann::json::parse(r2.out);
  REQUIRE(j1.size() == 1);
  CHECK(j1[0]["pass"] == true);
  CHECK(j1[0]["matrix_digest"] == j2[0]["matrix_digest"]);
  // Exact fields are byte-stable; wall-clock timing is not part of that.
  j1[0].erase("seconds");
  j2[0].erase("seconds");
  CHECK(j1.dump() == j2.dump());
  CHECK(j1[0]["bch_deviation"].get<double>() < 1e-10);
}

TEST_CASE("run_verification passes for a parameterized family member") {
  const auto d = catalog_lookup("A4,6", {{"alpha", rat(1)}, {"beta", rat(1)}});
  const auto report = run_verification(d, 99);
  CHECK(report.pass);
  CHECK(report.rep_dim == 4);
  CHECK(report.symbolic.all_pass());
}
