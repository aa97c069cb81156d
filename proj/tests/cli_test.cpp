#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <set>
#include <json.hpp>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(HCONF_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("classify-all summary") {
  auto r = run("classify-all --n 3 --format json");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["classes"] == 11);
  CHECK(j["total"] == 1024);
  CHECK(j["admissible"].get<int>() + j["non_admissible"].get<int>() == 1024);
}

TEST_CASE("groups of the maximal model") {
  auto r = run("groups --model max --format json");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["acting"] == "S_3");
  CHECK(j["G"] == "S_3");
  CHECK(j["H"] == "S_1");
}

TEST_CASE("verify-charts summary fields") {
  auto r = run("verify-charts --target R1_123 --format json");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["dimension"] == 6);
  CHECK(j["rank"] == 8);
  CHECK(j["paper_contained"] == true);
  for (const auto& c : j["colength_probes"]) CHECK(c == 3);
}

TEST_CASE("classification verdicts and JSON round trip") {
  auto r = run("classify R^1_123 --format json");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["status"] == "admissible");
  CHECK(j["model"] == "R^1_123");
  // Feed the echoed input back in.
  auto r2 = run("classify '" + j["input"].dump() + "' --format json");
  REQUIRE(r2.code == 0);
  CHECK(json::parse(r2.out)["model"] == "R^1_123");
}

TEST_CASE("incidence subcommand") {
  auto r = run("incidence --n 3 --sigma [2,3] --targets [[[1,2]],[[1,3]]]");
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  r = run("incidence --n 3 --sigma [3] --targets [[1,2]]");
  CHECK(r.code == 0);
  CHECK(r.out == "false\n");
}

TEST_CASE("dot output") {
  auto r = run("diagram --format dot");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("digraph", 0) == 0);
  CHECK(r.out.find("->") != std::string::npos);
}

TEST_CASE("deterministic output") {
  auto a = run("quotients --format json");
  auto b = run("quotients --format json");
  CHECK(a.out == b.out);
  auto c = run("strata R_{1,123} --format json");
  auto d = run("strata R_{1,123} --format json");
  REQUIRE(c.code == 0);
  CHECK(c.out == d.out);
  CHECK(json::parse(c.out)["count"] == 4);
}

TEST_CASE("exit codes") {
  CHECK(run("no-such-command").code == 2);
  CHECK(run("classify").code == 2);          // missing argument
  CHECK(run("classify R_bogus").code == 1);  // domain error
  CHECK(run("classify-all --format yaml").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("residual subcommand") {
  auto r = run("residual --vars x,y --ideal 'x^2,x*y,y^2' --by x,y "
               "--format json");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  std::set<std::string> gens(j["generators"].begin(), j["generators"].end());
  CHECK(gens == std::set<std::string>{"x", "y"});
}
