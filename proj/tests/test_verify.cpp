#include <doctest.h>

#include <string>
#include <vector>

#include "critid/verify.hpp"

using namespace critid;

TEST_CASE("gamma bound by a single ideal decision") {
  CHECK(gamma_at_most(complete(1), 0));
  CHECK(gamma_at_most(complete(4), 1));
  CHECK(!gamma_at_most(path(3), 1));
  CHECK(gamma_at_most(path(3), 2));
  CHECK(!gamma_at_most(path(5), 3));
}

TEST_CASE("small graph sweeps pass with stable reports") {
  SuiteResult v1 = run_v1(4);
  CHECK(v1.pass());
  CHECK(v1.cases.size() == 4);
  SuiteResult v4 = run_v4(4, 2);
  CHECK(v4.pass());
  REQUIRE(!v4.cases.empty());
  CHECK(v4.cases.back().name == "class total");
  CHECK(v4.cases.back().computed == "10 classes");
  // identical inputs give identical bytes; timing stays out of the JSON
  CHECK(suite_json(v1) == suite_json(run_v1(4)));
}

TEST_CASE("criticality and search suites pass") {
  CHECK(run_v2().pass());
  CHECK(run_v3().pass());
}

TEST_CASE("presentation suite passes at reduced width") {
  SuiteResult v5 = run_v5(2);
  CHECK(v5.pass());
  CHECK(v5.cases.size() >= 8);
}

TEST_CASE("table suite fails exactly on the misprinted pair rows") {
  SuiteResult v6 = run_v6(2);
  std::vector<std::string> want;
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n)
      for (int o = 1; o <= 2; ++o) {
        int pairs = (m >= 2 && n >= 2) + (m >= 2 && o >= 2) + (n >= 2 && o >= 2);
        if (pairs == 1)
          want.push_back("Kmno(" + std::to_string(m) + "," + std::to_string(n) + "," +
                         std::to_string(o) + ")");
      }
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n)
      if (m >= 2 && n >= 2)
        want.push_back("KmJoinTn(" + std::to_string(m) + "," + std::to_string(n) + ")");
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n)
      for (int o = 1; o <= 2; ++o)
        if ((m >= 2 && n >= 2) || (n >= 2 && o >= 2))
          want.push_back("TnJoinKmKo(" + std::to_string(m) + "," + std::to_string(n) + "," +
                         std::to_string(o) + ")");
  CHECK(v6.failing() == want);
  for (const auto& c : v6.cases)
    if (!c.pass) CHECK(c.detail == "corrected rows match the computed set");
}

TEST_CASE("matching suite fails only on the four-vertex criticality claim") {
  SuiteResult v7 = run_v7();
  CHECK(v7.failing() == std::vector<std::string>{"criticality n=4 k=1"});
}

TEST_CASE("hidden-unit suite fails only on the two stated determinants") {
  SuiteResult v8 = run_v8();
  CHECK(v8.failing() ==
        std::vector<std::string>{"stated determinant rows {1..5} columns {2,3,5,6,7}",
                                 "stated determinant rows {1,2,3,5,6} columns {3,4,5,6,7}"});
}

TEST_CASE("clause sweep misses exactly two triples") {
  CHECK(run_v9(4).pass());
  SuiteResult full = run_v9(9);
  CHECK(full.failing() == std::vector<std::string>{"complete tripartite sweep"});
  const CaseResult& sweep = full.cases[0];
  CHECK(sweep.computed.find("2 disagreements") != std::string::npos);
  CHECK(sweep.detail.find("K(2,2,1)") != std::string::npos);
  CHECK(sweep.detail.find("K(5,2,1)") != std::string::npos);
}
