#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "critid/critical.hpp"
#include "critid/snf.hpp"
#include "oracles.hpp"

using namespace critid;

namespace {

std::map<std::string, int> var_map(int n) {
  std::map<std::string, int> m;
  for (int i = 0; i < n; ++i) m["x" + std::to_string(i + 1)] = i;
  return m;
}

Polynomial P(const std::string& s, int nvars) {
  return parse_polynomial(s, var_map(nvars), nvars);
}

std::set<std::string> minor_strings(const Graph& g, int k) {
  std::set<std::string> out;
  for (const auto& p : k_minors(g, k).minors) out.insert(p.str());
  return out;
}

// variable renaming along a vertex permutation (vertex v of the relabeled
// graph was perm[v] originally)
Polynomial rename(const Polynomial& p, const std::vector<int>& perm) {
  Polynomial out = Polynomial::zero(p.nvars(), p.order());
  for (const auto& t : p.terms()) {
    Monomial m(p.nvars(), 0);
    for (int i = 0; i < p.nvars(); ++i) m[perm[i]] = t.mono[i];
    out = out + Polynomial::term(t.coeff, m, p.order());
  }
  return out;
}

}  // namespace

TEST_CASE("generalized laplacian entries") {
  PolyMatrix l = generalized_laplacian(complete(2));
  CHECK(l.at(0, 0) == P("x1", 2));
  CHECK(l.at(1, 1) == P("x2", 2));
  CHECK(l.at(0, 1) == P("-1", 2));
  CHECK(l.at(1, 0) == P("-1", 2));

  PolyMatrix p4 = generalized_laplacian(path(4));
  CHECK(p4.at(0, 1) == P("-1", 4));
  CHECK(p4.at(0, 2).is_zero());
  CHECK(p4.at(2, 2) == P("x3", 4));

  Graph mg(2);
  mg.add_edge(0, 1, 2);
  CHECK(generalized_laplacian(mg).at(0, 1) == P("-2", 2));
}

TEST_CASE("minor enumeration") {
  // 2-minors of complete graphs: x_i*x_j - 1 and x_i + 1 and nothing else
  CHECK(minor_strings(complete(3), 2) ==
        std::set<std::string>{"x1*x2 - 1", "x1*x3 - 1", "x2*x3 - 1", "x1 + 1", "x2 + 1",
                              "x3 + 1"});
  auto m4 = minor_strings(complete(4), 2);
  CHECK(m4.size() == 10);
  CHECK(m4.count("x1*x4 - 1") == 1);
  CHECK(m4.count("x2 + 1") == 1);

  // 1-minors of a trivial graph are bare variables
  CHECK(minor_strings(trivial(3), 1) == std::set<std::string>{"x1", "x2", "x3"});

  // unit witness: K3 has the off-diagonal 1-minor -1 at rows {0}, cols {1}
  MinorSet ms = k_minors(complete(3), 1);
  REQUIRE(ms.unit.has_value());
  LaplacianMinors lm(complete(3));
  CHECK(lm.minor_det(ms.unit->first, ms.unit->second).is_unit_constant());

  CHECK_THROWS_AS(k_minors(complete(3), 0), std::out_of_range);
  CHECK_THROWS_AS(k_minors(complete(3), 4), std::out_of_range);
}

TEST_CASE("critical ideal conventions") {
  Ideal low = critical_ideal(path(3), 0);
  CHECK(is_trivial(low));
  CHECK(is_trivial(critical_ideal(path(3), -2)));
  CHECK(critical_ideal(path(3), 4).is_zero_ideal());
  CHECK(!is_trivial(critical_ideal(path(3), 4)));

  CHECK(equal(critical_ideal(complete(2), 2), Ideal({P("x1*x2 - 1", 2)}, 2)));
  std::vector<Polynomial> ones;
  for (int i = 1; i <= 4; ++i) ones.push_back(P("1 + x" + std::to_string(i), 4));
  CHECK(equal(critical_ideal(complete(4), 2), Ideal(ones, 4)));
}

TEST_CASE("corank of basic families") {
  CHECK(corank(trivial(1)) == 0);
  CHECK(corank(trivial(4)) == 0);
  for (int n = 2; n <= 7; ++n) CHECK(corank(complete(n)) == 1);
  for (int n = 2; n <= 7; ++n) CHECK(corank(path(n)) == n - 1);

  CorankResult r = algebraic_corank(complete(4));
  CHECK(r.gamma == 1);
  REQUIRE(r.steps.size() == 2);
  CHECK(r.steps[0].trivial);
  CHECK(r.steps[0].method == DecisionMethod::unit_minor);
  CHECK(!r.steps[1].trivial);

  // full scan keeps going past the first non-trivial index
  CorankResult full = algebraic_corank(path(3), true);
  CHECK(full.gamma == 2);
  CHECK(full.steps.size() == 3);
  CHECK(!full.steps[2].trivial);
}

TEST_CASE("corank of the forbidden graphs is three") {
  for (const auto& [name, g] : f2_patterns().patterns) {
    CAPTURE(name);
    CHECK(corank(g) == 3);
  }
}

TEST_CASE("seven-vertex graph needs the basis computation at index five") {
  Graph g = hidden_unit_graph();
  CHECK(g.edge_count() == 15);
  CHECK(g.degree_sequence() == std::vector<int>{6, 5, 5, 4, 4, 3, 3});

  LaplacianMinors lm(g);
  // rows {1..5} x columns {2,3,5,6,7} and rows {1,2,3,5,6} x columns
  // {3,4,5,6,7} in 1-based vertex labels; the two determinants sum to -1,
  // so the fifth ideal contains a unit even though no single minor is one
  Polynomial a = lm.minor_det(0b0011111, 0b1110110);
  Polynomial b = lm.minor_det(0b0110111, 0b1111100);
  CHECK(a == P("-(1 + x3 + x5 + x3*x5)", 7));
  CHECK(b == P("x3 + x5 + x3*x5", 7));
  CHECK(a + b == P("-1", 7));
  CHECK(is_trivial(Ideal({a, b}, 7)));

  MinorSet fifth = k_minors(g, 5);
  CHECK(!fifth.unit.has_value());
  for (const auto& p : fifth.minors) CHECK(!p.is_unit_constant());

  CorankResult r = algebraic_corank(g);
  CHECK(r.gamma == 5);
  REQUIRE(r.steps.size() >= 5);
  CHECK(r.steps[4].trivial);
  CHECK(r.steps[4].method == DecisionMethod::groebner_basis);
}

TEST_CASE("gamma criticality") {
  CHECK(is_gamma_critical(path(2)));
  CHECK(is_gamma_critical(path(4)));
  CHECK(is_gamma_critical(path(5)));
  // K4 minus an edge has gamma 2 but deleting a degree-3 vertex leaves P3,
  // whose gamma is still 2
  CHECK(corank(matching_removed(4, 1)) == 2);
  CHECK(!is_gamma_critical(matching_removed(4, 1)));
  CHECK(is_gamma_critical(matching_removed(6, 2)));
  CHECK(!is_gamma_critical(complete(4)));
  CHECK(!is_gamma_critical(trivial(3)));
  CHECK(!is_gamma_critical(star(3)));
  Graph mg(2);
  mg.add_edge(0, 1, 2);
  CHECK_THROWS_AS(is_gamma_critical(mg), std::invalid_argument);
}

TEST_CASE("disjoint unions add coranks and factor ideals") {
  CHECK(corank(disjoint_union(path(2), path(2))) == 2);
  CHECK(gamma_disjoint_sum_check(path(2), path(2)));
  CHECK(gamma_disjoint_sum_check(path(3), path(2)));
  CHECK(corank(disjoint_union(path(3), path(2))) == 3);
  CHECK(gamma_disjoint_sum_check(trivial(1), complete(3)));
  CHECK(corank(disjoint_union(trivial(1), complete(3))) == 1);
}

TEST_CASE("forbidden graph search at small coranks") {
  auto f0 = forb_search(0, 4);
  REQUIRE(f0.size() == 1);
  CHECK(f0[0] == path(2));

  auto f1 = forb_search(1, 5);
  REQUIRE(f1.size() == 1);
  CHECK(is_isomorphic(f1[0], path(3)));

  CHECK_THROWS_AS(forb_search(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(forb_search(2, 8), std::invalid_argument);
}

TEST_CASE("nesting and monotonicity on sampled graphs") {
  std::mt19937 rng(4242);
  int done = 0;
  while (done < 8) {
    Graph g = oracle::random_graph(5, 0.55, rng);
    ++done;
    int n = g.order();
    for (int i = 1; i < n; ++i)
      CHECK(contains(critical_ideal(g, i), critical_ideal(g, i + 1)));
    int gam = corank(g);
    for (int v = 0; v < n; ++v) CHECK(corank(delete_vertex(g, v)) <= gam);
  }
}

TEST_CASE("minors are stable under relabeling") {
  std::mt19937 rng(77);
  Graph g = oracle::random_graph(5, 0.5, rng);
  std::vector<int> perm{2, 4, 0, 1, 3};
  Graph h(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v)
      if (g.adjacent(u, v)) h.add_edge(perm[u], perm[v]);
  for (int k = 1; k <= 3; ++k) {
    std::set<std::string> renamed;
    for (const auto& p : k_minors(g, k).minors)
      renamed.insert(rename(p, perm).abs_normalized().str());
    CHECK(renamed == minor_strings(h, k));
  }
}

TEST_CASE("evaluations of symbolic minors match the integer laplacian") {
  std::mt19937 rng(99);
  for (int rep = 0; rep < 10; ++rep) {
    Graph g = oracle::random_graph(4 + rep % 2, 0.6, rng);
    int n = g.order();
    std::vector<mpz_class> degs(n);
    for (int v = 0; v < n; ++v) degs[v] = g.degree(v);
    IntMatrix l = integer_laplacian(g);
    for (int k = 1; k <= n; ++k) {
      mpz_class gcd = 0;
      for (const auto& p : k_minors(g, k).minors) {
        mpz_class val = p.evaluate(degs);
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), val.get_mpz_t());
      }
      CHECK(gcd == determinantal_divisor(l, k));
    }
  }
}
