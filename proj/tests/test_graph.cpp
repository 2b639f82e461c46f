#include <doctest.h>

#include <random>
#include <set>

#include "critid/graph.hpp"
#include "oracles.hpp"

using namespace critid;

TEST_CASE("constructions have the expected shape") {
  CHECK(complete(5).edge_count() == 10);
  CHECK(trivial(4).edge_count() == 0);
  CHECK(path(4).degree_sequence() == std::vector<int>{2, 2, 1, 1});
  CHECK(star(3).order() == 4);
  CHECK(star(3).degree(3) == 3);
  CHECK(matching_removed(6, 2).edge_count() == 13);
  CHECK(complete_multipartite({2, 2}).edge_count() == 4);
  CHECK(complete_multipartite({3, 2, 1}).order() == 6);
  CHECK(cone(trivial(3)) == star(3));
  CHECK(is_isomorphic(t_join_cliques(1, 1, 1), path(3)));
  CHECK(is_isomorphic(complete_multipartite({1, 1, 1}), complete(3)));
}

TEST_CASE("t_join_cliques layout") {
  // T_2 joined to K_2 + K_1: x-clique first, then independent y-block, then z
  Graph g = t_join_cliques(2, 2, 1);
  CHECK(g.order() == 5);
  CHECK(g.adjacent(0, 1));        // inside K_m
  CHECK(!g.adjacent(2, 3));       // inside T_n
  CHECK(!g.adjacent(0, 4));       // K_m to K_o missing
  CHECK(g.adjacent(2, 0));        // T_n joined everywhere
  CHECK(g.adjacent(3, 4));
  CHECK(g.label(0) == "x1");
  CHECK(g.label(2) == "y1");
  CHECK(g.label(4) == "z1");
}

TEST_CASE("graph6 frozen encodings") {
  CHECK(emit_graph6(trivial(1)) == "@");
  CHECK(emit_graph6(complete(2)) == "A_");
  CHECK(emit_graph6(complete(4)) == "C~");
  CHECK(parse_graph6("@") == trivial(1));
  CHECK(parse_graph6("A_") == complete(2));
  CHECK(parse_graph6("C~") == complete(4));
}

TEST_CASE("graph6 round-trips every small connected graph") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_connected(n)) CHECK(parse_graph6(emit_graph6(g)) == g);
}

TEST_CASE("graph6 rejects malformed input with an offset") {
  CHECK_THROWS_AS(parse_graph6(""), parse_error);
  CHECK_THROWS_AS(parse_graph6("~??"), parse_error);   // multi-byte count unsupported
  CHECK_THROWS_AS(parse_graph6("C"), parse_error);     // truncated
  CHECK_THROWS_AS(parse_graph6("C~~"), parse_error);   // trailing bytes
  CHECK_THROWS_AS(parse_graph6("A" + std::string(1, char(42))), parse_error);  // bad data byte
  CHECK_THROWS_AS(parse_graph6("B~"), parse_error);    // nonzero padding for n=3
  try {
    parse_graph6("C");
  } catch (const parse_error& e) {
    CHECK(e.offset == 1);
  }
}

TEST_CASE("edge list round-trip and multigraph accumulation") {
  Graph g = parse_edge_list("3\n0 1\n0 1\n1 2\n");
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK(!g.is_simple());
  CHECK(parse_edge_list(emit_edge_list(g)) == g);
  CHECK_THROWS_AS(parse_edge_list("2\n0 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(emit_graph6(g), std::invalid_argument);
}

TEST_CASE("complement and components") {
  Graph g = complete_multipartite({2, 2, 1});
  Graph c = complement(g);
  auto comps = connected_components(c);
  CHECK(comps.size() == 3);
  CHECK(complement(c) == g);
  CHECK(is_connected(g));
  CHECK(!is_connected(c));
  CHECK(is_complete(complete(4)));
  CHECK(!is_complete(path(3)));
  // complement of a join is the disjoint union of complements
  Graph j = t_join_cliques(2, 3, 2);  // layout [K_3 | T_2 | K_2]
  Graph jc = complement(j);
  auto jcomp = connected_components(jc);
  REQUIRE(jcomp.size() == 2);
  CHECK(is_isomorphic(induced(jc, jcomp[0]), complete_multipartite({3, 2})));
  CHECK(is_isomorphic(induced(jc, jcomp[1]), complete(2)));
}

TEST_CASE("induced-subgraph search agrees with brute force") {
  std::mt19937 rng(2024);
  const auto& pats = f2_patterns().patterns;
  for (int rep = 0; rep < 60; ++rep) {
    Graph g = oracle::random_graph(6, 0.5, rng);
    for (const auto& [name, p] : pats) {
      if (p.order() > 6) continue;
      CHECK(contains_induced(g, p) == oracle::contains_induced_brute(g, p));
    }
    CHECK(contains_induced(g, path(3)) == oracle::contains_induced_brute(g, path(3)));
  }
  // an embedding, when reported, really is induced
  Graph host = complete_multipartite({3, 3});
  auto img = find_induced(host, path(3));
  REQUIRE(img.has_value());
  CHECK(induced(host, *img) == path(3));
}

TEST_CASE("forbidden pattern shapes") {
  const auto& pats = f2_patterns().patterns;
  REQUIRE(pats.size() == 5);
  CHECK(pats[0].first == "P4");
  CHECK(pats[0].second == path(4));
  CHECK(pats[1].second.degree_sequence() == std::vector<int>{4, 4, 3, 3, 2});   // K5 minus 2-star
  CHECK(pats[2].second.degree_sequence() == std::vector<int>{5, 5, 4, 4, 4, 4});  // K6 minus matching
  CHECK(pats[3].second.degree_sequence() == std::vector<int>{4, 2, 2, 1, 1});  // diamondless fork
  CHECK(pats[4].second.degree_sequence() == std::vector<int>{4, 3, 2, 2, 1});
  for (const auto& [name, p] : pats) CHECK(is_connected(p));
  // pairwise non-isomorphic
  for (size_t i = 0; i < pats.size(); ++i)
    for (size_t j = i + 1; j < pats.size(); ++j)
      CHECK(!is_isomorphic(pats[i].second, pats[j].second));
  CHECK(f2_hit(path(5)) == std::string("P4"));
  CHECK(!f2_hit(complete(6)).has_value());
}

TEST_CASE("canonical codes separate exactly the isomorphism classes") {
  std::mt19937 rng(31);
  for (int rep = 0; rep < 40; ++rep) {
    Graph g = oracle::random_graph(6, 0.4, rng);
    // relabeling never changes the code
    std::vector<int> perm{3, 1, 5, 0, 2, 4};
    Graph h(6);
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v)
        if (g.adjacent(u, v)) h.add_edge(perm[u], perm[v]);
    CHECK(canonical_code(g) == canonical_code(h));
    CHECK(is_isomorphic(g, h));
  }
  CHECK(!is_isomorphic(path(4), star(3)));
}

TEST_CASE("connected enumeration counts") {
  const size_t expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    auto it = enumerate_connected(n);
    CHECK(it.size() == expected[n]);
    if (n <= 5) CHECK(it.size() == oracle::count_connected_classes_brute(n));
  }
  // pairwise non-isomorphic and actually connected
  for (int n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> codes;
    for (const Graph& g : enumerate_connected(n)) {
      CHECK(is_connected(g));
      CHECK(g.order() == n);
      CHECK(codes.insert(canonical_code(g)).second);
    }
  }
  CHECK_THROWS_AS(enumerate_connected(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_connected(9), std::invalid_argument);
}
