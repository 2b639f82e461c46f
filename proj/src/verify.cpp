#include "critid/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "critid/classify.hpp"
#include "critid/critical.hpp"
#include "critid/ideal.hpp"
#include "critid/minor_tables.hpp"
#include "critid/snf.hpp"

namespace critid {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Slot-indexed outputs keep the report order independent of scheduling.
void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn) {
  size_t workers = std::min(static_cast<size_t>(std::max(jobs, 1)), count);
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string join_list(const std::vector<std::string>& xs, size_t cap = 12) {
  std::string out;
  for (size_t i = 0; i < xs.size() && i < cap; ++i) {
    if (i) out += "; ";
    out += xs[i];
  }
  if (xs.size() > cap) out += "; (+" + std::to_string(xs.size() - cap) + " more)";
  return out;
}

std::string factors_str(const std::vector<mpz_class>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

CaseResult sweep_case(std::string name, std::string input, std::string expected, size_t total,
                      const std::vector<std::string>& failures) {
  CaseResult c;
  c.name = std::move(name);
  c.input = std::move(input);
  c.expected = std::move(expected);
  c.pass = failures.empty();
  c.computed =
      std::to_string(total) + " instances, " + std::to_string(failures.size()) + " disagreements";
  c.detail = join_list(failures);
  return c;
}

void collect(const std::vector<std::string>& slots, std::vector<std::string>& out) {
  for (const auto& s : slots)
    if (!s.empty()) out.push_back(s);
}

// Isomorphism classes of connected simple graphs by vertex count.
const size_t kConnectedClasses[8] = {0, 1, 1, 2, 6, 21, 112, 853};

const char* family_str(TableFamily f) {
  switch (f) {
    case TableFamily::Kmn: return "Kmn";
    case TableFamily::Kmno: return "Kmno";
    case TableFamily::KmJoinTn: return "KmJoinTn";
    case TableFamily::TnJoinKmKo: return "TnJoinKmKo";
  }
  return "?";
}

std::string triple_str(int m, int n, int o) {
  return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " o=" + std::to_string(o);
}

const char* method_str(DecisionMethod m) {
  switch (m) {
    case DecisionMethod::convention: return "convention";
    case DecisionMethod::unit_minor: return "unit minor";
    case DecisionMethod::constant_gcd: return "constant gcd";
    case DecisionMethod::single_generator: return "single generator";
    case DecisionMethod::modp_witness: return "mod-p witness";
    case DecisionMethod::groebner_basis: return "groebner basis";
  }
  return "?";
}

}  // namespace

bool SuiteResult::pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

std::vector<std::string> SuiteResult::failing() const {
  std::vector<std::string> out;
  for (const auto& c : cases)
    if (!c.pass) out.push_back(c.name);
  return out;
}

bool gamma_at_most(const Graph& g, int k) { return !is_trivial(critical_ideal(g, k + 1)); }

SuiteResult run_v1(int n_max, int jobs) {
  auto t0 = Clock::now();
  SuiteResult s{"V1", "gamma <= 1 iff complete iff P3-free on connected graphs"};
  Graph p3 = path(3);
  for (int n = 1; n <= n_max; ++n) {
    GraphClassIterator classes = enumerate_connected(n);
    const std::vector<Graph>& all = classes.all();
    std::vector<std::string> slot(all.size());
    parallel_for(all.size(), jobs, [&](size_t i) {
      const Graph& g = all[i];
      try {
        bool complete = is_complete(g);
        bool p3_free = !contains_induced(g, p3);
        bool le1 = gamma_at_most(g, 1);
        if (complete != p3_free || p3_free != le1)
          slot[i] = emit_graph6(g) + ": complete=" + yn(complete) + " P3-free=" + yn(p3_free) +
                    " gamma<=1=" + yn(le1);
      } catch (const std::exception& e) {
        slot[i] = emit_graph6(g) + ": error: " + e.what();
      }
    });
    std::vector<std::string> failures;
    collect(slot, failures);
    CaseResult c = sweep_case(
        "n=" + std::to_string(n), "all connected graphs on " + std::to_string(n) + " vertices",
        std::to_string(kConnectedClasses[n]) + " classes, the three predicates coincide",
        all.size(), failures);
    if (all.size() != kConnectedClasses[n]) {
      c.pass = false;
      c.detail = "class count off: " + std::to_string(all.size()) +
                 (c.detail.empty() ? "" : "; " + c.detail);
    }
    s.cases.push_back(std::move(c));
  }
  s.seconds = elapsed(t0);
  return s;
}

SuiteResult run_v2() {
  auto t0 = Clock::now();
  SuiteResult s{"V2", "the five minimal forbidden graphs have gamma 3 and gamma <= 2 deletions"};
  for (const auto& [name, g] : f2_patterns().patterns) {
    CaseResult c;
    c.name = name;
    c.input = "graph6 " + emit_graph6(g);
    c.expected = "gamma = 3 and every vertex deletion has gamma <= 2";
    try {
      int gam = corank(g);
      std::vector<std::string> stuck;
      for (int v = 0; v < g.order(); ++v)
        if (!gamma_at_most(delete_vertex(g, v), 2))
          stuck.push_back("vertex " + std::to_string(v + 1));
      c.computed = "gamma = " + std::to_string(gam) +
                   (stuck.empty() ? ", all deletions have gamma <= 2"
                                  : ", gamma > 2 after deleting " + join_list(stuck));
      c.pass = gam == 3 && stuck.empty();
    } catch (const std::exception& e) {
      c.computed = std::string("error: ") + e.what();
    }
    s.cases.push_back(std::move(c));
  }
  s.seconds = elapsed(t0);
  return s;
}

namespace {

CaseResult forb_case(int k, int n_max, const std::vector<Graph>& want,
                     const std::string& want_desc) {
  CaseResult c;
  c.name = "forb_search(" + std::to_string(k) + ", " + std::to_string(n_max) + ")";
  c.input = c.name;
  c.expected = want_desc;
  try {
    std::vector<Graph> got = forb_search(k, n_max);
    std::multiset<std::uint64_t> got_codes, want_codes;
    std::vector<std::string> names;
    for (const auto& g : got) {
      got_codes.insert(canonical_code(g));
      names.push_back(emit_graph6(g));
    }
    for (const auto& g : want) want_codes.insert(canonical_code(g));
    c.computed = std::to_string(got.size()) + " graphs: " + join_list(names);
    c.pass = got_codes == want_codes;
  } catch (const std::exception& e) {
    c.computed = std::string("error: ") + e.what();
  }
  return c;
}

}  // namespace

SuiteResult run_v3() {
  auto t0 = Clock::now();
  SuiteResult s{"V3", "forbidden-graph searches return exactly the known minimal sets"};
  std::vector<Graph> f2;
  for (const auto& [name, g] : f2_patterns().patterns) f2.push_back(g);
  s.cases.push_back(forb_case(2, 6, f2, "the five minimal graphs for gamma <= 2"));
  s.cases.push_back(forb_case(1, 5, {path(3)}, "exactly P3"));
  s.cases.push_back(forb_case(0, 4, {path(2)}, "exactly P2"));
  s.seconds = elapsed(t0);
  return s;
}

SuiteResult run_v4(int n_max, int jobs) {
  auto t0 = Clock::now();
  SuiteResult s{"V4", "three gamma <= 2 characterizations agree on connected graphs"};
  size_t total = 0;
  for (int n = 1; n <= n_max; ++n) {
    GraphClassIterator classes = enumerate_connected(n);
    const std::vector<Graph>& all = classes.all();
    total += all.size();
    std::vector<std::string> slot(all.size());
    parallel_for(all.size(), jobs, [&](size_t i) {
      const Graph& g = all[i];
      try {
        bool le2 = gamma_at_most(g, 2);
        bool f2_free = !f2_hit(g).has_value();
        bool structural = in_gamma_le2_structural(g).family != Family::none;
        if (le2 != f2_free || f2_free != structural)
          slot[i] = emit_graph6(g) + ": gamma<=2=" + yn(le2) + " pattern-free=" + yn(f2_free) +
                    " family=" + yn(structural);
      } catch (const std::exception& e) {
        slot[i] = emit_graph6(g) + ": error: " + e.what();
      }
    });
    std::vector<std::string> failures;
    collect(slot, failures);
    s.cases.push_back(sweep_case(
        "n=" + std::to_string(n), "all connected graphs on " + std::to_string(n) + " vertices",
        "ideal route, forbidden-pattern route and family route coincide", all.size(), failures));
  }
  CaseResult c;
  c.name = "class total";
  c.input = "n = 1.." + std::to_string(n_max);
  size_t want = 0;
  for (int n = 1; n <= n_max; ++n) want += kConnectedClasses[n];
  c.expected = std::to_string(want) + " classes";
  c.computed = std::to_string(total) + " classes";
  c.pass = total == want;
  s.cases.push_back(std::move(c));
  s.seconds = elapsed(t0);
  return s;
}

SuiteResult run_v5(int max_block, int jobs) {
  auto t0 = Clock::now();
  SuiteResult s{"V5", "third critical ideals match their stated presentations and are non-trivial"};
  struct Item {
    TableFamily f;
    int m, n, o;
  };
  std::vector<Item> items;
  for (int m = 1; m <= max_block; ++m)
    for (int n = 0; n <= m; ++n)
      for (int o = 0; o <= n; ++o) {
        if (m + n + o < 4) continue;
        try {
          presentation_case(TableFamily::Kmno, m, n, o);
        } catch (const hypothesis_error&) {
          continue;
        }
        items.push_back({TableFamily::Kmno, m, n, o});
      }
  for (int m = 0; m <= max_block; ++m)
    for (int o = 0; o <= m; ++o)
      for (int n = 0; n <= max_block; ++n) {
        if (m + n + o < 4) continue;
        try {
          presentation_case(TableFamily::TnJoinKmKo, m, n, o);
        } catch (const hypothesis_error&) {
          continue;
        }
        items.push_back({TableFamily::TnJoinKmKo, m, n, o});
      }
  s.cases.resize(items.size());
  parallel_for(items.size(), jobs, [&](size_t i) {
    const Item& it = items[i];
    CaseResult c;
    c.name = std::string(family_str(it.f)) + "(" + std::to_string(it.m) + "," +
             std::to_string(it.n) + "," + std::to_string(it.o) + ")";
    c.expected = "presented ideal equals the computed third ideal and is not the unit ideal";
    try {
      Graph g = table_graph(it.f, it.m, it.n, it.o);
      c.input = triple_str(it.m, it.n, it.o) + "; graph6 " + emit_graph6(g);
      int idx = presentation_case(it.f, it.m, it.n, it.o);
      Ideal presented = expected_I3(it.f, it.m, it.n, it.o);
      bool nontrivial = !is_trivial(presented);
      bool eq = equal(critical_ideal(g, 3), presented);
      c.computed = "case " + std::to_string(idx) + ": ideals " + (eq ? "equal" : "differ") +
                   ", presented ideal " + (nontrivial ? "non-trivial" : "trivial");
      c.pass = eq && nontrivial;
    } catch (const std::exception& e) {
      c.computed = std::string("error: ") + e.what();
    }
    s.cases[i] = std::move(c);
  });
  s.seconds = elapsed(t0);
  return s;
}

SuiteResult run_v6(int max_block, int jobs) {
  auto t0 = Clock::now();
  SuiteResult s{"V6", "printed three-minor tables reproduce the computed minor sets"};
  struct Item {
    TableFamily f;
    int m, n, o;
  };
  std::vector<Item> items;
  for (int m = 1; m <= max_block; ++m)
    for (int n = 1; n <= max_block; ++n) items.push_back({TableFamily::Kmn, m, n, 0});
  for (int m = 1; m <= max_block; ++m)
    for (int n = 1; n <= max_block; ++n)
      for (int o = 1; o <= max_block; ++o) items.push_back({TableFamily::Kmno, m, n, o});
  for (int m = 1; m <= max_block; ++m)
    for (int n = 1; n <= max_block; ++n) items.push_back({TableFamily::KmJoinTn, m, n, 0});
  for (int m = 1; m <= max_block; ++m)
    for (int n = 1; n <= max_block; ++n)
      for (int o = 1; o <= max_block; ++o) items.push_back({TableFamily::TnJoinKmKo, m, n, o});
  s.cases.resize(items.size());
  parallel_for(items.size(), jobs, [&](size_t i) {
    const Item& it = items[i];
    CaseResult c;
    c.name = std::string(family_str(it.f)) + "(" + std::to_string(it.m) + "," +
             std::to_string(it.n) +
             (it.o ? "," + std::to_string(it.o) + ")" : std::string(")"));
    c.expected = "computed 3-minor set equals the instantiated printed rows";
    try {
      Graph g = table_graph(it.f, it.m, it.n, it.o);
      c.input = triple_str(it.m, it.n, it.o) + "; graph6 " + emit_graph6(g);
      MinorTableDiff d = minor_table_diff(it.f, it.m, it.n, it.o);
      c.pass = d.ok();
      c.computed = d.ok() ? "sets equal" : d.str(g.variable_names());
      if (!d.ok())
        c.detail = verify_minor_table(it.f, it.m, it.n, it.o, TableEdition::corrected)
                       ? "corrected rows match the computed set"
                       : "corrected rows also differ";
    } catch (const std::exception& e) {
      c.computed = std::string("error: ") + e.what();
    }
    s.cases[i] = std::move(c);
  });
  s.seconds = elapsed(t0);
  return s;
}

SuiteResult run_v7() {
  auto t0 = Clock::now();
  SuiteResult s{"V7", "complete graphs minus matchings: invariant factors and criticality"};
  for (int n = 2; n <= 10; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      Graph g = matching_removed(n, k);
      CaseResult c;
      c.name = "snf n=" + std::to_string(n) + " k=" + std::to_string(k);
      c.input = "n=" + std::to_string(n) + " k=" + std::to_string(k) + "; graph6 " +
                emit_graph6(g);
      try {
        std::vector<mpz_class> got = smith_normal_form(reduced_laplacian(g));
        if (n == 2 * k) {
          c.expected = "(no stated form at n = 2k)";
          c.computed = factors_str(got);
          c.detail = "skipped: the statement covers n >= 2k + 1 only";
          c.pass = true;
        } else {
          std::vector<mpz_class> want;
          if (n >= 2 * k + 2) {
            want.assign(k + 1, 1);
            want.insert(want.end(), n - 2 * k - 2, n);
            want.insert(want.end(), k, mpz_class(n) * (n - 2));
          } else {
            want.assign(k, 1);
            want.push_back(n - 2);
            want.insert(want.end(), k - 1, mpz_class(n) * (n - 2));
          }
          c.expected = factors_str(want);
          c.computed = factors_str(got);
          c.pass = got == want;
        }
      } catch (const std::exception& e) {
        c.computed = std::string("error: ") + e.what();
      }
      s.cases.push_back(std::move(c));
    }
  for (int k = 1; 2 * k + 2 <= 8; ++k) {
    int n = 2 * k + 2;
    Graph g = matching_removed(n, k);
    CaseResult c;
    c.name = "criticality n=" + std::to_string(n) + " k=" + std::to_string(k);
    c.input = "n=" + std::to_string(n) + " k=" + std::to_string(k) + "; graph6 " + emit_graph6(g);
    c.expected = "gamma = " + std::to_string(k + 1) + " and gamma-critical";
    try {
      int gam = corank(g);
      bool crit = is_gamma_critical(g);
      c.computed = "gamma = " + std::to_string(gam) +
                   (crit ? ", gamma-critical" : ", not gamma-critical");
      c.pass = gam == k + 1 && crit;
      if (!crit && n == 4)
        c.detail = "deleting a degree-3 vertex leaves P3, whose gamma is still 2";
    } catch (const std::exception& e) {
      c.computed = std::string("error: ") + e.what();
    }
    s.cases.push_back(std::move(c));
  }
  s.seconds = elapsed(t0);
  return s;
}

SuiteResult run_v8() {
  auto t0 = Clock::now();
  SuiteResult s{"V8", "seven-vertex example: trivial fifth ideal without any unit minor"};
  Graph g = hidden_unit_graph();
  std::string input = "graph6 " + emit_graph6(g);
  std::map<std::string, int> vars;
  for (int i = 0; i < 7; ++i) vars["x" + std::to_string(i + 1)] = i;
  LaplacianMinors lm(g);

  {
    CaseResult c;
    c.name = "gamma";
    c.input = input;
    c.expected = "gamma = 5";
    try {
      CorankResult r = algebraic_corank(g);
      c.computed = "gamma = " + std::to_string(r.gamma);
      c.pass = r.gamma == 5;
      if (r.steps.size() >= 5)
        c.detail = std::string("fifth ideal decided by ") + method_str(r.steps[4].method);
    } catch (const std::exception& e) {
      c.computed = std::string("error: ") + e.what();
    }
    s.cases.push_back(std::move(c));
  }
  {
    CaseResult c;
    c.name = "no unit 5-minor";
    c.input = input;
    c.expected = "441 determinants scanned, none equal to +-1";
    try {
      std::vector<std::uint16_t> subsets;
      for (std::uint16_t mask = 0; mask < 128; ++mask)
        if (std::popcount(mask) == 5) subsets.push_back(mask);
      int units = 0, scanned = 0;
      for (std::uint16_t r : subsets)
        for (std::uint16_t cmask : subsets) {
          ++scanned;
          if (lm.minor_det(r, cmask).is_unit_constant()) ++units;
        }
      c.computed = std::to_string(scanned) + " determinants scanned, " + std::to_string(units) +
                   " equal to +-1";
      c.pass = scanned == 441 && units == 0;
    } catch (const std::exception& e) {
      c.computed = std::string("error: ") + e.what();
    }
    s.cases.push_back(std::move(c));
  }

  Polynomial a = lm.minor_det(0b0011111, 0b1110110);
  Polynomial b = lm.minor_det(0b0110111, 0b1111100);
  {
    CaseResult c;
    c.name = "stated determinant rows {1..5} columns {2,3,5,6,7}";
    c.input = input + "; rows {1,2,3,4,5} columns {2,3,5,6,7}";
    Polynomial want = parse_polynomial("x2 + x5 + x2*x5", vars, 7);
    c.expected = want.str();
    c.computed = a.str();
    c.pass = a == want;
    if (!c.pass) c.detail = "the determinant involves x3, not x2, and carries the minus sign";
    s.cases.push_back(std::move(c));
  }
  {
    CaseResult c;
    c.name = "stated determinant rows {1,2,3,5,6} columns {3,4,5,6,7}";
    c.input = input + "; rows {1,2,3,5,6} columns {3,4,5,6,7}";
    Polynomial want = parse_polynomial("-1 - x2 - x5 - x2*x5", vars, 7);
    c.expected = want.str();
    c.computed = b.str();
    c.pass = b == want;
    if (!c.pass) c.detail = "the determinant involves x3, not x2, and is the positive combination";
    s.cases.push_back(std::move(c));
  }
  {
    CaseResult c;
    c.name = "the two determinants generate the unit ideal";
    c.input = input + "; the same two submatrices";
    c.expected = "trivial ideal";
    try {
      bool triv = is_trivial(Ideal({a, b}, 7));
      c.computed = triv ? "trivial ideal" : "non-trivial ideal";
      c.detail = "sum of the two determinants = " + (a + b).str();
      c.pass = triv && a + b == Polynomial::constant(-1, 7);
    } catch (const std::exception& e) {
      c.computed = std::string("error: ") + e.what();
    }
    s.cases.push_back(std::move(c));
  }
  s.seconds = elapsed(t0);
  return s;
}

SuiteResult run_v9(int sweep_bound) {
  auto t0 = Clock::now();
  SuiteResult s{"V9", "clause lists for exactly two unit invariant factors match the oracle"};
  {
    std::vector<std::string> bad;
    size_t total = 0;
    for (int m = 1; m <= sweep_bound; ++m)
      for (int n = 0; n <= m; ++n)
        for (int o = 0; o <= n && m + n + o <= sweep_bound; ++o) {
          Graph g = complete_multipartite({m, n, o});
          if (g.order() < 2 || !is_connected(g)) continue;
          ++total;
          bool clause = in_g2(g).member;
          bool oracle = f_count(g, 1) == 2;
          if (clause != oracle)
            bad.push_back("K(" + std::to_string(m) + "," + std::to_string(n) + "," +
                          std::to_string(o) + "): clause=" + yn(clause) +
                          " f1==2=" + yn(oracle));
        }
    CaseResult c = sweep_case("complete tripartite sweep",
                              "all K(m,n,o), m >= n >= o >= 0, m+n+o <= " +
                                  std::to_string(sweep_bound),
                              "clause verdict equals the f1 = 2 oracle", total, bad);
    if (!c.pass)
      c.detail += "; each mismatch satisfies o = 1 and gcd(m+1, n+1) > 1 with m, n >= 2, "
                  "which the clause list admits only from m, n >= 3";
    s.cases.push_back(std::move(c));
  }
  {
    std::vector<std::string> bad;
    size_t total = 0;
    for (int m = 0; m <= sweep_bound; ++m)
      for (int o = 0; o <= m; ++o)
        for (int n = 0; n + m + o <= sweep_bound; ++n) {
          Graph g = t_join_cliques(n, m, o);
          if (g.order() < 2 || !is_connected(g)) continue;
          ++total;
          bool clause = in_g2(g).member;
          bool oracle = f_count(g, 1) == 2;
          if (clause != oracle)
            bad.push_back("T(" + std::to_string(n) + ")v(K(" + std::to_string(m) + ")+K(" +
                          std::to_string(o) + ")): clause=" + yn(clause) +
                          " f1==2=" + yn(oracle));
        }
    s.cases.push_back(sweep_case("t-join sweep",
                                 "all T_n v (K_m + K_o), m >= o >= 0, m+n+o <= " +
                                     std::to_string(sweep_bound),
                                 "clause verdict equals the f1 = 2 oracle", total, bad));
  }
  auto fact = [&](const std::string& name, const Graph& g, int want) {
    CaseResult c;
    c.name = name;
    c.input = "graph6 " + emit_graph6(g);
    c.expected = "f1 = " + std::to_string(want);
    try {
      int got = f_count(g, 1);
      c.computed = "f1 = " + std::to_string(got);
      c.pass = got == want;
    } catch (const std::exception& e) {
      c.computed = std::string("error: ") + e.what();
    }
    s.cases.push_back(std::move(c));
  };
  fact("cone over the 3-star", cone(star(3)), 2);
  fact("3-star", star(3), 3);
  fact("K6 minus two disjoint edges", matching_removed(6, 2), 3);
  fact("K5 minus two disjoint edges", matching_removed(5, 2), 2);
  s.seconds = elapsed(t0);
  return s;
}

namespace {

// Deterministic sampler; raw engine bits so the stream does not depend on a
// library's distribution implementation.
Graph sampled_graph(int n, std::mt19937& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((rng() >> 16) & 1) g.add_edge(u, v);
  return g;
}

}  // namespace

SuiteResult run_p1(int jobs) {
  auto t0 = Clock::now();
  SuiteResult s{"P1", "structural properties independent of the classification"};

  {
    std::mt19937 rng(60283);
    std::vector<Graph> sample;
    for (int rep = 0; rep < 100; ++rep) sample.push_back(sampled_graph(rep % 6 + 1, rng));
    std::vector<std::string> slot(sample.size());
    parallel_for(sample.size(), jobs, [&](size_t i) {
      const Graph& g = sample[i];
      try {
        for (int k = 1; k <= g.order(); ++k)
          if (!contains(critical_ideal(g, k), critical_ideal(g, k + 1))) {
            slot[i] = emit_graph6(g) + ": I_" + std::to_string(k + 1) +
                      " not inside I_" + std::to_string(k);
            return;
          }
      } catch (const std::exception& e) {
        slot[i] = emit_graph6(g) + ": error: " + e.what();
      }
    });
    std::vector<std::string> failures;
    collect(slot, failures);
    s.cases.push_back(sweep_case("ideal nesting", "100 sampled graphs, n <= 6",
                                 "I_{k+1} contained in I_k for every k", sample.size(),
                                 failures));
  }
  {
    std::vector<std::string> failures;
    size_t total = 0;
    for (int n = 2; n <= 5; ++n) {
      GraphClassIterator classes = enumerate_connected(n);
      for (const Graph& g : classes) {
        ++total;
        int gam = corank(g);
        for (int v = 0; v < n; ++v) {
          int sub = corank(delete_vertex(g, v));
          if (sub > gam)
            failures.push_back(emit_graph6(g) + " minus vertex " + std::to_string(v + 1) +
                               ": gamma " + std::to_string(sub) + " > " + std::to_string(gam));
        }
      }
    }
    s.cases.push_back(sweep_case("gamma monotone under vertex deletion",
                                 "all connected graphs, n <= 5",
                                 "gamma never rises when a vertex is deleted", total, failures));
  }
  {
    std::vector<Graph> pool;
    for (int n = 1; n <= 3; ++n) {
      GraphClassIterator classes = enumerate_connected(n);
      pool.insert(pool.end(), classes.begin(), classes.end());
    }
    std::vector<std::pair<Graph, Graph>> pairs;
    for (size_t i = 0; i < pool.size(); ++i)
      for (size_t j = i; j < pool.size(); ++j) pairs.emplace_back(pool[i], pool[j]);
    pairs.emplace_back(path(4), complete(3));
    pairs.emplace_back(star(3), path(3));
    pairs.emplace_back(matching_removed(4, 1), complete(2));
    std::vector<std::string> failures;
    for (const auto& [g, h] : pairs)
      if (!gamma_disjoint_sum_check(g, h))
        failures.push_back(emit_graph6(g) + " + " + emit_graph6(h));
    s.cases.push_back(sweep_case("gamma additive over disjoint unions",
                                 "pairs of small connected graphs",
                                 "gamma adds and the product ideals match the direct minors",
                                 pairs.size(), failures));
  }
  {
    std::vector<std::string> failures;
    size_t total = 0;
    for (int n = 1; n <= 6; ++n) {
      GraphClassIterator classes = enumerate_connected(n);
      for (const Graph& g : classes) {
        ++total;
        int gam = corank(g);
        int f1 = f_count(g, 1);
        if (gam > f1)
          failures.push_back(emit_graph6(g) + ": gamma " + std::to_string(gam) + " > f1 " +
                             std::to_string(f1));
      }
    }
    s.cases.push_back(sweep_case("gamma bounded by f1", "all connected graphs, n <= 6",
                                 "gamma <= number of unit invariant factors", total, failures));
  }
  {
    std::vector<std::string> failures;
    size_t total = 0;
    for (int n = 2; n <= 6; ++n) {
      GraphClassIterator classes = enumerate_connected(n);
      for (const Graph& g : classes) {
        ++total;
        std::vector<mpz_class> d = smith_normal_form(reduced_laplacian(g));
        for (size_t i = 0; i + 1 < d.size(); ++i)
          if (d[i] == 0 ? d[i + 1] != 0 : d[i + 1] % d[i] != 0) {
            failures.push_back(emit_graph6(g) + ": chain " + factors_str(d));
            break;
          }
        const std::vector<mpz_class> base0 = critical_group(g, 0).factors;
        for (int v = 1; v < n; ++v)
          if (critical_group(g, v).factors != base0) {
            failures.push_back(emit_graph6(g) + ": base vertex " + std::to_string(v + 1) +
                               " changes the factors");
            break;
          }
      }
    }
    s.cases.push_back(sweep_case("SNF divisibility and base independence",
                                 "all connected graphs, 2 <= n <= 6",
                                 "each factor divides the next; the cokernel ignores the base",
                                 total, failures));
  }
  {
    std::vector<std::string> failures;
    size_t total = 0;
    for (int n = 2; n <= 6; ++n) {
      GraphClassIterator classes = enumerate_connected(n);
      for (const Graph& g : classes) {
        ++total;
        IntMatrix r = reduced_laplacian(g);
        std::vector<mpz_class> d = smith_normal_form(r);
        mpz_class prod = 1;
        for (int k = 1; k <= n - 1; ++k) {
          prod *= d[k - 1];
          if (prod != determinantal_divisor(r, k)) {
            failures.push_back(emit_graph6(g) + ": k = " + std::to_string(k));
            break;
          }
        }
      }
    }
    s.cases.push_back(sweep_case("determinantal divisor bridge",
                                 "all connected graphs, 2 <= n <= 6",
                                 "d_1 ... d_k equals the gcd of the integer k-minors", total,
                                 failures));
  }
  s.seconds = elapsed(t0);
  return s;
}

std::vector<SuiteResult> verify_all(int n_max, int sweep_bound, int jobs) {
  if (n_max < 1 || n_max > 7) throw std::invalid_argument("n_max must be 1..7");
  if (sweep_bound < 0 || sweep_bound > 9) throw std::invalid_argument("sweep_bound must be 0..9");
  std::vector<SuiteResult> out;
  out.push_back(run_v1(n_max, jobs));
  out.push_back(run_v2());
  out.push_back(run_v3());
  out.push_back(run_v4(n_max, jobs));
  out.push_back(run_v5(4, jobs));
  out.push_back(run_v6(4, jobs));
  out.push_back(run_v7());
  out.push_back(run_v8());
  out.push_back(run_v9(sweep_bound));
  out.push_back(run_p1(jobs));
  return out;
}

namespace {

nlohmann::ordered_json case_json(const CaseResult& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["pass"] = c.pass;
  j["input"] = c.input;
  j["expected"] = c.expected;
  j["computed"] = c.computed;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

nlohmann::ordered_json suite_json_obj(const SuiteResult& s) {
  nlohmann::ordered_json j;
  j["suite"] = s.id;
  j["title"] = s.title;
  j["pass"] = s.pass();
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : s.cases) j["cases"].push_back(case_json(c));
  return j;
}

}  // namespace

std::string suite_json(const SuiteResult& s) { return suite_json_obj(s).dump(1); }

std::string report_json(const std::vector<SuiteResult>& suites) {
  nlohmann::ordered_json j;
  bool all = true;
  for (const auto& s : suites) all = all && s.pass();
  j["pass"] = all;
  j["suites"] = nlohmann::ordered_json::array();
  for (const auto& s : suites) j["suites"].push_back(suite_json_obj(s));
  return j.dump(1);
}

std::string report_text(const std::vector<SuiteResult>& suites) {
  std::string out;
  for (const auto& s : suites) {
    size_t failed = s.failing().size();
    char buf[64];
    std::snprintf(buf, sizeof(buf), " (%zu cases, %.2fs)", s.cases.size(), s.seconds);
    out += s.id + (s.pass() ? " PASS " : " FAIL ") + s.title + buf + "\n";
    for (const auto& c : s.cases) {
      if (c.pass) continue;
      out += "  FAIL " + c.name + "\n";
      out += "    input:    " + c.input + "\n";
      out += "    expected: " + c.expected + "\n";
      out += "    computed: " + c.computed + "\n";
      if (!c.detail.empty()) out += "    detail:   " + c.detail + "\n";
    }
    if (failed) out += "  " + std::to_string(failed) + " of " +
                       std::to_string(s.cases.size()) + " cases fail\n";
  }
  bool all = true;
  for (const auto& s : suites) all = all && s.pass();
  out += all ? "all suites pass\n" : "some suites fail\n";
  return out;
}

}  // namespace critid
