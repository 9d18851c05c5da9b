#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

using nlohmann::json;

int run(const std::string& args) {
  const std::string cmd =
      std::string(WIGNERLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
#ifdef _WIN32
  return status;
#else
  return WEXITSTATUS(status);
#endif
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream out;
  out << f.rdbuf();
  return out.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

json slurp_json(const std::string& path) { return json::parse(slurp(path)); }

}  // namespace

TEST_CASE("usage errors exit 1") {
  CHECK(run("") == 1);
  CHECK(run("no-such-command") == 1);
  CHECK(run("spin-curve --range 0:0:1") == 1);
  CHECK(run("spin-curve --format yaml") == 1);
  CHECK(run("qft-region --ratio 0.5") == 1);
  CHECK(run("qft-curve --xmin 10 --xmax 1") == 1);
}

TEST_CASE("help and version exit 0") {
  CHECK(run("--help > cli_help.txt") == 0);
  CHECK(run("--version > cli_version.txt") == 0);
}

TEST_CASE("spin-curve CSV contract") {
  REQUIRE(run("spin-curve --out cli_spin.csv") == 0);
  const auto rows = lines(slurp("cli_spin.csv"));
  REQUIRE(rows.size() == 402);
  CHECK(rows[0] == "delta,kappa");
  CHECK(rows[1] == "0,0.5625");
  // the row nearest delta = 0.695 (lattice point 139) is close to the root
  std::istringstream near(rows[140]);
  std::string delta_field, kappa_field;
  std::getline(near, delta_field, ',');
  std::getline(near, kappa_field, ',');
  CHECK(std::stod(delta_field) == doctest::Approx(0.695).epsilon(1e-12));
  CHECK(std::fabs(std::stod(kappa_field)) < 0.01);
}

TEST_CASE("identical invocations are byte-identical") {
  REQUIRE(run("spin-curve --range 0:1.5:101 --out cli_rep1.csv") == 0);
  REQUIRE(run("spin-curve --range 0:1.5:101 --out cli_rep2.csv") == 0);
  CHECK(slurp("cli_rep1.csv") == slurp("cli_rep2.csv"));
  REQUIRE(run("lhv-fuzz --n 20000 --seed 5 --out cli_fz1.json") == 0);
  REQUIRE(run("lhv-fuzz --n 20000 --seed 5 --out cli_fz2.json") == 0);
  CHECK(slurp("cli_fz1.json") == slurp("cli_fz2.json"));
}

TEST_CASE("spin-curve JSON report schema") {
  REQUIRE(run("spin-curve --format json --range 0:2:11 --out cli_spin.json") ==
          0);
  const json j = slurp_json("cli_spin.json");
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "spin-curve");
  CHECK(j.contains("version"));
  CHECK(j["config"]["range"] == "0:2:11");
  CHECK(j["points"].size() == 11);
  CHECK(j["delta_threshold"].get<double>() > 0.69);
  CHECK(j["delta_threshold"].get<double>() < 0.70);
}

TEST_CASE("spin-max finds the known maximum") {
  REQUIRE(run("spin-max --out cli_max.json") == 0);
  const json j = slurp_json("cli_max.json");
  CHECK(j["margin"].get<double>() == doctest::Approx(9.0 / 16.0).epsilon(1e-9));
}

TEST_CASE("meson-dynamic report and closed-form check") {
  REQUIRE(run("meson-dynamic --gamma 1 --dgamma 0.1 --t 1.0 "
              "--out cli_md.json") == 0);
  const json j = slurp_json("cli_md.json");
  CHECK(j["report"]["violated"] == true);
  const double expect = 0.5 * (1.0 + std::exp(-0.1));
  CHECK(j["rhs_over_lhs"].get<double>() ==
        doctest::Approx(expect).epsilon(1e-12));
  CHECK(std::fabs(j["closed_form_diff"].get<double>()) <= 1e-12);
}

TEST_CASE("meson-static is never violated") {
  REQUIRE(run("meson-static --alpha 0.9 --out cli_ms.json") == 0);
  const json j = slurp_json("cli_ms.json");
  CHECK(j["report"]["violated"] == false);
  CHECK(j["probabilities"]["b1_bbar"].get<double>() ==
        doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("qft-region point report hits the classic margin") {
  REQUIRE(run("qft-region --ratio 1 --angles 2.0944,1.0472,1.0472 "
              "--out cli_qp.json") == 0);
  const json j = slurp_json("cli_qp.json");
  CHECK(j["report"]["margin"].get<double>() ==
        doctest::Approx(0.25).epsilon(1e-4));
  CHECK(j["report"]["violated"] == true);
}

TEST_CASE("degrees flag converts at the boundary") {
  REQUIRE(run("qft-region --ratio 1 --degrees --angles 120,60,60 "
              "--out cli_qd.json") == 0);
  const json j = slurp_json("cli_qd.json");
  CHECK(j["report"]["margin"].get<double>() ==
        doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("qft-region Monte Carlo fraction") {
  REQUIRE(run("qft-region --ratio 2 --samples 50000 --seed 3 "
              "--out cli_qr.json") == 0);
  const json j = slurp_json("cli_qr.json");
  CHECK(j["fraction"].get<double>() > 0.0);
  CHECK(j["samples"] == 50000);
}

TEST_CASE("lhv-fuzz certifies soundness with exit 0") {
  REQUIRE(run("lhv-fuzz --n 100000 --seed 7 --out cli_fuzz.json") == 0);
  const json j = slurp_json("cli_fuzz.json");
  CHECK(j["max_margin"].get<double>() <= 1e-12);
  CHECK(j["any_violation"] == false);
  CHECK(j["trials"] == 100000);
}

TEST_CASE("scan emits the lattice in order") {
  REQUIRE(run("scan --axis omega_t=0:3:4 --fix theta_ba=2.0944 "
              "--fix theta_ca=1.0472 --fix theta_bc=1.0472 "
              "--out cli_scan.csv") == 0);
  const auto rows = lines(slurp("cli_scan.csv"));
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "omega_t,lhs,rhs,margin,violated");
  CHECK(rows[1].substr(0, 2) == "0,");
  CHECK(rows[1].back() == '1');  // the classic static violation at omega_t=0
  CHECK(run("scan --axis bogus=0:1:3") == 1);
  CHECK(run("scan --axis omega_t=0:1:3 --fix omega_t=1") == 1);
  CHECK(run("scan") == 1);
}

TEST_CASE("config file merges under explicit flags") {
  {
    std::ofstream cfg("cli_cfg.json", std::ios::binary);
    cfg << "{\"t\": 2.0, \"dgamma\": 0.1}\n";
  }
  REQUIRE(run("meson-dynamic --config cli_cfg.json --out cli_c1.json") == 0);
  const json j1 = slurp_json("cli_c1.json");
  CHECK(j1["config"]["t"].get<double>() == 2.0);

  // explicit flag wins over the config value
  REQUIRE(run("meson-dynamic --config cli_cfg.json --t 3.0 "
              "--out cli_c2.json") == 0);
  const json j2 = slurp_json("cli_c2.json");
  CHECK(j2["config"]["t"].get<double>() == 3.0);

  // unknown keys are rejected
  {
    std::ofstream cfg("cli_bad.json", std::ios::binary);
    cfg << "{\"bogus\": 1}\n";
  }
  CHECK(run("meson-dynamic --config cli_bad.json") == 1);
  // malformed JSON is rejected
  {
    std::ofstream cfg("cli_broken.json", std::ios::binary);
    cfg << "{not json";
  }
  CHECK(run("meson-dynamic --config cli_broken.json") == 1);
}
