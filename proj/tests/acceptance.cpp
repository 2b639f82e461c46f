// Runs every verification suite at full scale and prints one line per
// criterion. Default mode exits 0 iff all suites pass. With
// --check-documented it exits 0 iff the outcome matches the documented
// verdict matrix instead: V1-V5 and P1 pass, and V6-V9 fail in exactly the
// documented case sets (the misprinted pair rows of three minor tables, the
// four-vertex criticality claim, the two stated determinants, and the two
// tripartite triples the clause list misses).
#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "critid/verify.hpp"

using namespace critid;

namespace {

std::string tuple_name(const char* fam, int m, int n, int o) {
  std::string s = std::string(fam) + "(" + std::to_string(m) + "," + std::to_string(n);
  if (o) s += "," + std::to_string(o);
  return s + ")";
}

std::set<std::string> documented_failures(const std::string& id) {
  std::set<std::string> out;
  if (id == "V6") {
    for (int m = 1; m <= 4; ++m)
      for (int n = 1; n <= 4; ++n) {
        if (m >= 2 && n >= 2) out.insert(tuple_name("KmJoinTn", m, n, 0));
        for (int o = 1; o <= 4; ++o) {
          int pairs = (m >= 2 && n >= 2) + (m >= 2 && o >= 2) + (n >= 2 && o >= 2);
          if (pairs == 1) out.insert(tuple_name("Kmno", m, n, o));
          if ((m >= 2 && n >= 2) || (n >= 2 && o >= 2))
            out.insert(tuple_name("TnJoinKmKo", m, n, o));
        }
      }
  } else if (id == "V7") {
    out.insert("criticality n=4 k=1");
  } else if (id == "V8") {
    out.insert("stated determinant rows {1..5} columns {2,3,5,6,7}");
    out.insert("stated determinant rows {1,2,3,5,6} columns {3,4,5,6,7}");
  } else if (id == "V9") {
    out.insert("complete tripartite sweep");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  int n_max = 7;
  int sweep = 9;
  int jobs = 1;
  bool check_documented = false;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--nmax" && i + 1 < argc) {
      n_max = std::atoi(argv[++i]);
    } else if (a == "--sweep" && i + 1 < argc) {
      sweep = std::atoi(argv[++i]);
    } else if (a == "--jobs" && i + 1 < argc) {
      jobs = std::atoi(argv[++i]);
    } else if (a == "--check-documented") {
      check_documented = true;
    } else {
      std::fprintf(stderr, "unknown argument: %s\n", a.c_str());
      return 2;
    }
  }

  std::vector<SuiteResult> suites = verify_all(n_max, sweep, jobs);
  bool all_pass = true;
  bool documented = true;
  int passed = 0;
  for (const SuiteResult& s : suites) {
    bool p = s.pass();
    all_pass = all_pass && p;
    passed += p ? 1 : 0;
    std::printf("%s %s  %s (%zu cases, %.1fs)\n", s.id.c_str(), p ? "PASS" : "FAIL",
                s.title.c_str(), s.cases.size(), s.seconds);
    std::vector<std::string> fails = s.failing();
    for (size_t i = 0; i < fails.size() && i < 6; ++i)
      std::printf("        failed: %s\n", fails[i].c_str());
    if (fails.size() > 6) std::printf("        (+%zu more)\n", fails.size() - 6);
    if (check_documented) {
      std::set<std::string> got(fails.begin(), fails.end());
      std::set<std::string> want = documented_failures(s.id);
      if (got != want) {
        documented = false;
        for (const std::string& f : got)
          if (!want.count(f)) std::printf("        undocumented failure: %s\n", f.c_str());
        for (const std::string& f : want)
          if (!got.count(f)) std::printf("        documented failure missing: %s\n", f.c_str());
      }
    }
  }
  std::printf("\n%d of %zu criteria pass\n", passed, suites.size());
  if (check_documented) {
    std::printf("documented verdicts: %s\n", documented ? "reproduced exactly" : "NOT reproduced");
    return documented ? 0 : 1;
  }
  return all_pass ? 0 : 1;
}
