#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibercone/limits.hpp"
#include "fibercone/numbers.hpp"

namespace fibercone {

// One expected value with its source annotation.
struct Expectation {
  std::string key;
  std::string value;
  std::string provenance;
};

struct JointStatement {
  std::string elements;           // "(y*z, y+z, x)"
  std::vector<std::string> slots; // entries "I" or "m"
  Int expected;
  std::string provenance;
};

// A self-contained test case: a ring, named ideals, and expectations.
struct CorpusCase {
  std::string name;
  std::string ring_text;
  std::vector<std::pair<std::string, std::string>> ideals;  // name -> expression
  std::vector<Expectation> expects;
  std::vector<JointStatement> joints;
  // Cover relations (1-indexed) certifying a stable linearization of the
  // written generator order of I; triggers the deformation consistency check.
  std::optional<std::vector<std::pair<int, int>>> deformation_covers;
  // Pure Delta-set case: k[Delta] series only.
  std::optional<int> delta_n;
  std::vector<std::pair<int, int>> delta_pairs;
  // Face ring of the 2xn minors poset.
  std::optional<int> minors_n;
};

enum class CaseStatus { Pass, Fail, FalsificationEvent, ErrorStatus };

struct CheckResult {
  std::string what;
  std::string expected;
  std::string computed;
  bool ok = false;
};

struct CaseReport {
  std::string name;
  CaseStatus status = CaseStatus::Pass;
  std::vector<CheckResult> checks;
  std::string error;
  double millis = 0.0;
};

struct RunReport {
  std::vector<CaseReport> cases;
  int passed = 0;
  int failed = 0;
  int falsifications = 0;
  int errors = 0;

  bool all_pass() const { return failed == 0 && falsifications == 0 && errors == 0; }
  // 0 all pass, 4 on any falsification, otherwise 1.
  int exit_code() const;
};

std::vector<CorpusCase> parse_corpus(const std::string& text);

CaseReport run_case(const CorpusCase& c, const Limits& limits = {});
RunReport run_corpus(const std::vector<CorpusCase>& cases, const Limits& limits = {},
                     int jobs = 1);

// The paper-example corpus compiled into the library.
const std::string& bundled_corpus();

}  // namespace fibercone
