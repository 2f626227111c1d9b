// Runs the command-line tool on the fixtures and inspects the JSON reports.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(CLI_PATH) + " " + args + " 2>&1";
  std::FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  Run r;
  char buf[4096];
  while (const std::size_t k = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, k);
  r.code = WEXITSTATUS(pclose(pipe));
  return r;
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

nlohmann::json report(const std::string& args, int expected_code = 0) {
  const Run r = cli(args + " --format json");
  REQUIRE(r.code == expected_code);
  return nlohmann::json::parse(r.out);
}

std::vector<long> dims(const nlohmann::json& table) {
  std::vector<long> out;
  for (const auto& row : table) out.push_back(row["dim"].get<long>());
  return out;
}

}  // namespace

TEST_CASE("check") {
  const auto j = report("check " + fixture("n2.alg"));
  CHECK(j["status"] == "ok");
  REQUIRE(j["verdicts"].size() == 3);
  for (const auto& v : j["verdicts"]) CHECK(v["ok"] == true);

  const auto bad = report("check --witness " + fixture("not_compatible.alg"), 1);
  CHECK(bad["status"] == "fail");
  CHECK(bad["verdicts"][2]["check"] == "pair");
  CHECK(bad["verdicts"][2]["condition"] == "mixed");
  CHECK(bad["verdicts"][2]["basis"] == nlohmann::json::array({1, 2, 3}));
}

TEST_CASE("cohomology tables") {
  CHECK(dims(report("cohomology --max-degree 2 " + fixture("abelian2.alg"))["cohomology"]) ==
        std::vector<long>{2, 4, 4});
  CHECK(dims(report("cohomology --max-degree 1 " + fixture("sl2_pair.alg"))["cohomology"]) ==
        std::vector<long>{0, 0});
  const auto j = report("cohomology --max-degree 1 --representatives " + fixture("abelian2.alg"));
  CHECK(j["representatives"]["1"].size() == 4);
}

TEST_CASE("deform") {
  const auto j = report("deform --nijenhuis N " + fixture("nijenhuis_seed.alg"));
  CHECK(j["trivial_deformation"]["omega1"] == nlohmann::json::array({"1 2 3 -1"}));
  const auto w = report("deform --omega w " + fixture("abelian2.alg"));
  CHECK(w["triviality"]["class_in_H2"] == "nonzero");
}

TEST_CASE("extend") {
  const auto h = report("extend --omega w " + fixture("heisenberg.alg"));
  CHECK(h["extension"]["pi1"] == nlohmann::json::array({"1 2 3 1"}));
  CHECK(h["classification"]["class_in_H2"] == "nonzero");
  const auto l = report("extend --omega w --xi xi " + fixture("n2_line.alg"));
  CHECK(l["gauge_transform"]["omega1"] == nlohmann::json::array({"1 2 1 -1"}));
  const auto n = report("extend --mode nonabelian --theta t --omega w --xi xi " + fixture("n2_by_n2.alg"));
  CHECK(n["status"] == "ok");
}

TEST_CASE("poisson") {
  const auto j = report("poisson --poly-degree 1 --max-degree 2 " + fixture("n2.alg"));
  CHECK(dims(j["reduced_cohomology"]) == std::vector<long>{1, 1, 1, 0, 2, 2});
}

TEST_CASE("timing only on request") {
  CHECK_FALSE(report("check " + fixture("n2.alg")).contains("elapsed_ms"));
  CHECK(report("check --timing " + fixture("n2.alg")).contains("elapsed_ms"));
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(cli("").code == 2);
  CHECK(cli("cohomology").code == 2);
  CHECK(cli("check " + fixture("missing.alg")).code == 2);
  CHECK(cli("check --format xml " + fixture("n2.alg")).code == 2);
  CHECK(cli("deform " + fixture("n2.alg")).code == 2);
  CHECK(cli("deform --omega nothere " + fixture("n2.alg")).code == 2);
  CHECK(cli("extend --omega w " + fixture("n2.alg")).code == 2);

  const std::string path = std::string(TEST_TMP_DIR) + "/zero_denominator.alg";
  std::ofstream(path) << "[algebra]\ndim 2\n[pi1]\n1 2 2 1/0\n";
  const Run r = cli("check " + path);
  CHECK(r.code == 2);
  CHECK(r.out.find("zero denominator at line 4") != std::string::npos);
}
