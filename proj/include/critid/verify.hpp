#pragma once

#include <string>
#include <vector>

#include "critid/graph.hpp"

namespace critid {

// One checked fact. `input` replays the case on its own: a graph6 string,
// a parameter triple, or both.
struct CaseResult {
  std::string name;
  bool pass = false;
  std::string input;
  std::string expected;
  std::string computed;
  std::string detail;
};

struct SuiteResult {
  std::string id;  // V1..V9, P1
  std::string title;
  std::vector<CaseResult> cases;
  double seconds = 0;

  bool pass() const;
  std::vector<std::string> failing() const;  // names of failing cases, in order
};

// gamma(g) <= k iff I_{k+1}(g) is not the unit ideal; one ideal decision
// instead of a full corank scan.
bool gamma_at_most(const Graph& g, int k);

// The verification suites. Sweep widths default to the checked-in report
// scale; jobs > 1 spreads independent graphs or parameter tuples over a
// worker pool without changing the case order.
SuiteResult run_v1(int n_max = 7, int jobs = 1);      // gamma <= 1 iff complete iff P3-free
SuiteResult run_v2();                                 // five minimal graphs, gamma = 3, critical
SuiteResult run_v3();                                 // forbidden-graph searches at small scale
SuiteResult run_v4(int n_max = 7, int jobs = 1);      // three gamma <= 2 routes agree
SuiteResult run_v5(int max_block = 4, int jobs = 1);  // third-ideal presentations
SuiteResult run_v6(int max_block = 4, int jobs = 1);  // printed 3-minor tables vs computed
SuiteResult run_v7();                                 // matched-deletion family SNF + criticality
SuiteResult run_v8();                                 // seven-vertex hidden-unit example
SuiteResult run_v9(int sweep_bound = 9);              // two-unit-factor clause lists vs oracle
SuiteResult run_p1(int jobs = 1);                     // theorem-independent properties

// All ten suites in id order. Pre: 1 <= n_max <= 7, 0 <= sweep_bound <= 9.
std::vector<SuiteResult> verify_all(int n_max = 7, int sweep_bound = 9, int jobs = 1);

// Stable rendering; timing is omitted from JSON so identical inputs give
// byte-identical reports.
std::string suite_json(const SuiteResult& s);
std::string report_json(const std::vector<SuiteResult>& suites);
std::string report_text(const std::vector<SuiteResult>& suites);

}  // namespace critid
