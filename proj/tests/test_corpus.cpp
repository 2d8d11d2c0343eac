#include <doctest.h>

#include <cstdio>
#include <memory>
#include <string>

#include "fibercone/corpus.hpp"
#include "fibercone/errors.hpp"

using namespace fibercone;

TEST_CASE("empty corpus passes with zero cases") {
  auto report = run_corpus(parse_corpus(""), {});
  CHECK(report.cases.empty());
  CHECK(report.all_pass());
  CHECK(report.exit_code() == 0);
}

TEST_CASE("corpus parsing") {
  auto cases = parse_corpus(
      "# comment\n"
      "case demo\n"
      "ring x, y\n"
      "ideal I = (x^2, y^2)\n"
      "expect mu = 2 @ \"two generators\"\n"
      "end\n");
  REQUIRE(cases.size() == 1);
  CHECK(cases[0].name == "demo");
  CHECK(cases[0].ideals.size() == 1);
  REQUIRE(cases[0].expects.size() == 1);
  CHECK(cases[0].expects[0].key == "mu");
  CHECK(cases[0].expects[0].value == "2");
  CHECK(cases[0].expects[0].provenance == "two generators");

  CHECK_THROWS_AS(parse_corpus("case x\nbogus statement\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_corpus("case x\nring x\n"), ParseError);  // unterminated
}

TEST_CASE("a failing expectation is reported, not thrown") {
  auto cases = parse_corpus(
      "case wrong\n"
      "ring x, y\n"
      "ideal I = (x, y)\n"
      "expect mu = 3\n"
      "end\n");
  auto report = run_case(cases[0]);
  CHECK(report.status == CaseStatus::Fail);
  REQUIRE(report.checks.size() == 1);
  CHECK(report.checks[0].expected == "3");
  CHECK(report.checks[0].computed == "2");
}

TEST_CASE("bundled corpus passes end to end") {
  auto cases = parse_corpus(bundled_corpus());
  CHECK(cases.size() >= 10);
  auto report = run_corpus(cases, {}, 4);
  for (const auto& c : report.cases) {
    INFO(c.name << ": " << c.error);
    for (const auto& ch : c.checks) {
      INFO(ch.what << " expected " << ch.expected << " got " << ch.computed);
      CHECK(ch.ok);
    }
    CHECK(c.status == CaseStatus::Pass);
  }
  CHECK(report.all_pass());
}

TEST_CASE("corpus reruns are deterministic") {
  auto cases = parse_corpus(
      "case a\nring x, y\nideal I = (x^2, x*y, y^2)\nideal J = (x^2, y^2)\n"
      "expect rj = 1\nexpect cm = true\nend\n");
  auto first = run_case(cases[0]);
  auto second = run_case(cases[0]);
  REQUIRE(first.checks.size() == second.checks.size());
  for (size_t i = 0; i < first.checks.size(); ++i) {
    CHECK(first.checks[i].computed == second.checks[i].computed);
  }
}

#ifdef FIBERCONE_CLI_PATH
namespace {

std::string run_cli(const std::string& args) {
  std::string cmd = std::string(FIBERCONE_CLI_PATH) + " " + args + " 2>&1";
  std::unique_ptr<FILE, decltype(&pclose)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe.get())) out.append(buf, n);
  return out;
}

}  // namespace

TEST_CASE("cli json output is schema-stable") {
  std::string got = run_cli(
      "cm-check --json --ring x,y,z "
      "--ideal \"((x^2, y^2)^3, x*(x^2, y^2)*z^3, z^6)\" --reduction \"(x^6, y^6, z^6)\"");
  const std::string golden = R"json({
  "input": {
    "ring": "ring x, y, z",
    "ideal": "(x^6, x^4*y^2, x^3*z^3, x^2*y^4, x*y^2*z^3, y^6, z^6)",
    "reduction": "(x^6, y^6, z^6)"
  },
  "series": {
    "numerator": [
      1,
      4,
      1
    ],
    "denomPower": 3
  },
  "analyticSpread": 3,
  "reductionNumber": 2,
  "criterionLengths": [
    1,
    4,
    1
  ],
  "eFiber": 6,
  "isCM": true,
  "isMinimalMultiplicity": false
}
)json";
  CHECK(got == golden);
}

TEST_CASE("cli exit codes") {
  // negative verdict -> 1
  std::string cmd1 = std::string(FIBERCONE_CLI_PATH) +
                     " cm-check --ring x,y --ideal \"(x^3, x*y^4*(x,y), y^7)\""
                     " --reduction \"(x^3, y^7)\" > /dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd1.c_str())) == 1);
  // parse error -> 2
  std::string cmd2 = std::string(FIBERCONE_CLI_PATH) +
                     " fiber-series --ring x,y --ideal \"(x, w)\" > /dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd2.c_str())) == 2);
  // budget -> 3
  std::string cmd3 = std::string(FIBERCONE_CLI_PATH) +
                     " fiber-series --max-n 3 --ring x,y --ideal \"(x^4, x^3*y, y^4)\""
                     " > /dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd3.c_str())) == 3);
}
#endif
