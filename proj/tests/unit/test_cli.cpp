#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "report.hpp"

using coxcoh::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cohomology command") {
  const Result r = invoke({"--format", "json", "cohomology", "A3", "--rep", "reflection"});
  CHECK(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["h_dims"] == nlohmann::json::array({0, 2, 0, 0}));
  CHECK(j["verdict"] == "pass");
  CHECK(j["field"]["M"] == 1);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "group", "field", "space_dims", "h_dims", "euler", "mode", "checks",
                                         "comparisons", "details", "verdict"});
}

TEST_CASE("exit codes") {
  CHECK(invoke({"cohomology", "Q7"}).code == coxcoh::cli::kExitParseError);
  CHECK(invoke({"cohomology", "A3", "--rep", "nonsense"}).code == coxcoh::cli::kExitParseError);
  CHECK(invoke({"frobnicate"}).code == coxcoh::cli::kExitParseError);
  CHECK(invoke({"tor", "--m", "1"}).code == coxcoh::cli::kExitParseError);
  CHECK(invoke({"--mode", "modular", "cohomology", "H3"}).code == coxcoh::cli::kExitParseError);
  CHECK(invoke({"tor", "--m", "3", "--i-max", "6"}).code == coxcoh::cli::kExitBudget);
  CHECK(invoke({"--budget-mb", "1", "cohomology", "A2", "--rep", "regular"}).code == coxcoh::cli::kExitPass);
  CHECK(invoke({"--help"}).code == coxcoh::cli::kExitPass);
}

TEST_CASE("json round trip") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--format", "json", "cohomology", "H3"},
           {"--format", "json", "verify", "reflection", "--groups", "D4,I2(5)"},
           {"--format", "json", "tor", "--m", "1", "--i-max", "3"},
           {"--format", "json", "indcomplex", "A4"}}) {
    const Result r = invoke(args);
    REQUIRE(r.code == 0);
    const auto report = coxcoh::cli::report_from_json(nlohmann::ordered_json::parse(r.out));
    CHECK(coxcoh::cli::render_json(report) == r.out);
  }
}

TEST_CASE("reflection verdicts carry the shift") {
  const Result r = invoke({"--format", "json", "verify", "reflection", "--groups", "D4,A5"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["comparisons"][0]["verdict"] == "match-with-degree-shift");
  CHECK(j["comparisons"][0]["shift"] == 1);
  CHECK(j["comparisons"][1]["verdict"] == "exact-match");
}

TEST_CASE("same seed gives identical bytes") {
  const std::vector<std::string> args{"--format", "json", "--mode", "modular", "--seed", "17",
                                      "cohomology", "A3", "--rep", "regular"};
  CHECK(invoke(args).out == invoke(args).out);
}

TEST_CASE("--out writes the report") {
  const std::string path = "cli_out_test.json";
  const Result r = invoke({"--format", "json", "--out", path, "cohomology", "A2"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(nlohmann::ordered_json::parse(buf.str())["command"] == "cohomology");
  std::remove(path.c_str());
}

TEST_CASE("table output") {
  const Result r = invoke({"verify", "trivial", "--n-max", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict  pass") != std::string::npos);
}

TEST_CASE("list splitting respects parentheses") {
  CHECK(coxcoh::cli::split_list("A3,I2(5),B2") == std::vector<std::string>{"A3", "I2(5)", "B2"});
  CHECK(coxcoh::cli::split_list("") == std::vector<std::string>{});
}
