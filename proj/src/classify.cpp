#include "critid/classify.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace critid {

namespace {

std::string triple(int a, int b, int c) {
  return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
}

// Sides of comp as a complete bipartite graph inside h, one side possibly
// empty (a single vertex is K_{1,0}). Pre: comp is a connected component.
std::optional<std::pair<std::vector<int>, std::vector<int>>> biclique_sides(
    const Graph& h, const std::vector<int>& comp) {
  std::vector<int> color(h.order(), -1);
  std::vector<int> sides[2];
  std::vector<int> queue{comp[0]};
  color[comp[0]] = 0;
  sides[0].push_back(comp[0]);
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v : comp) {
      if (v == u || !h.adjacent(u, v)) continue;
      if (color[v] == -1) {
        color[v] = 1 - color[u];
        sides[color[v]].push_back(v);
        queue.push_back(v);
      }
    }
  }
  for (int u : comp)
    for (int v : comp) {
      if (u >= v) continue;
      bool cross = color[u] != color[v];
      if (cross != h.adjacent(u, v)) return std::nullopt;
    }
  return std::make_pair(sides[0], sides[1]);
}

}  // namespace

std::string FamilyMembership::str() const {
  switch (family) {
    case Family::complete:
      return "complete(" + std::to_string(m) + ")";
    case Family::tripartite:
      return "tripartite(" + triple(m, n, o) + ")";
    case Family::t_join:
      return "t-join-cliques(" + triple(n, m, o) + ")";
    case Family::none:
      return "none";
  }
  return "none";
}

std::vector<FamilyMembership> family_parameterizations(const Graph& g) {
  Graph h = complement(g);
  auto comps = connected_components(h);
  std::vector<bool> clique(comps.size());
  for (size_t i = 0; i < comps.size(); ++i) clique[i] = is_complete(induced(h, comps[i]));

  std::vector<FamilyMembership> out;

  if (comps.size() <= 3 && std::all_of(clique.begin(), clique.end(), [](bool b) { return b; })) {
    std::vector<size_t> order(comps.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return comps[a].size() > comps[b].size(); });
    FamilyMembership fm;
    fm.family = Family::tripartite;
    fm.blocks.assign(g.order(), 0);
    int sizes[3] = {0, 0, 0};
    for (size_t r = 0; r < order.size(); ++r) {
      sizes[r] = static_cast<int>(comps[order[r]].size());
      for (int v : comps[order[r]]) fm.blocks[v] = static_cast<int>(r);
    }
    fm.m = sizes[0];
    fm.n = sizes[1];
    fm.o = sizes[2];
    out.push_back(std::move(fm));
  }

  // T_n v (K_m + K_o): the complement is K_n plus a complete bipartite graph,
  // the latter being one biclique component or an independent set (o = 0).
  std::set<std::tuple<int, int, int>> seen;
  for (int pick = -1; pick < static_cast<int>(comps.size()); ++pick) {
    if (pick >= 0 && !clique[pick]) continue;
    std::vector<size_t> rest;
    for (size_t i = 0; i < comps.size(); ++i)
      if (static_cast<int>(i) != pick) rest.push_back(i);

    FamilyMembership fm;
    fm.family = Family::t_join;
    fm.blocks.assign(g.order(), 0);
    fm.n = pick < 0 ? 0 : static_cast<int>(comps[pick].size());

    bool isolated = true;
    for (size_t i : rest) isolated = isolated && comps[i].size() == 1;
    if (isolated) {
      fm.m = static_cast<int>(rest.size());
      fm.o = 0;
      for (size_t i : rest) fm.blocks[comps[i][0]] = 1;
    } else if (rest.size() == 1) {
      auto sides = biclique_sides(h, comps[rest[0]]);
      if (!sides) continue;
      auto [a, b] = *sides;
      if (a.size() < b.size()) std::swap(a, b);
      fm.m = static_cast<int>(a.size());
      fm.o = static_cast<int>(b.size());
      for (int v : a) fm.blocks[v] = 1;
      for (int v : b) fm.blocks[v] = 2;
    } else {
      continue;
    }
    if (seen.insert({fm.m, fm.n, fm.o}).second) out.push_back(std::move(fm));
  }
  return out;
}

bool validate_membership(const Graph& g, const FamilyMembership& fm) {
  if (fm.family == Family::none) return false;
  if (static_cast<int>(fm.blocks.size()) != g.order()) return false;
  int counts[3] = {0, 0, 0};
  for (int b : fm.blocks) {
    if (b < 0 || b > 2) return false;
    ++counts[b];
  }
  bool sized = false;
  switch (fm.family) {
    case Family::complete:
      sized = fm.m == g.order() && fm.n == 0 && fm.o == 0;
      break;
    case Family::tripartite:
      sized = counts[0] == fm.m && counts[1] == fm.n && counts[2] == fm.o;
      break;
    case Family::t_join:
      sized = counts[0] == fm.n && counts[1] == fm.m && counts[2] == fm.o;
      break;
    default:
      return false;
  }
  if (!sized) return false;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      bool want = false;
      switch (fm.family) {
        case Family::complete:
          want = true;
          break;
        case Family::tripartite:
          want = fm.blocks[u] != fm.blocks[v];
          break;
        case Family::t_join:
          // clique blocks are internally complete, the T block is joined to
          // both cliques, and the two cliques miss each other
          want = (fm.blocks[u] == fm.blocks[v] && fm.blocks[u] != 0) ||
                 (fm.blocks[u] == 0) != (fm.blocks[v] == 0);
          break;
        default:
          return false;
      }
      if (g.adjacent(u, v) != want) return false;
    }
  return true;
}

bool in_gamma_le1(const Graph& g) {
  if (!g.is_simple()) throw std::invalid_argument("classification needs a simple graph");
  return is_complete(g);
}

FamilyMembership in_gamma_le2_structural(const Graph& g) {
  if (!g.is_simple()) throw std::invalid_argument("classification needs a simple graph");
  if (is_complete(g)) {
    FamilyMembership fm;
    fm.family = Family::complete;
    fm.m = g.order();
    fm.blocks.assign(g.order(), 0);
    return fm;
  }
  auto params = family_parameterizations(g);
  for (Family f : {Family::tripartite, Family::t_join})
    for (const auto& fm : params)
      if (fm.family == f) return fm;
  return FamilyMembership{};
}

bool in_gamma_le2_any(const Graph& g) {
  std::vector<std::vector<int>> big;
  for (auto& comp : connected_components(g))
    if (comp.size() >= 2) big.push_back(std::move(comp));
  if (big.size() == 0) return true;
  if (big.size() == 1) return in_gamma_le2_structural(induced(g, big[0])).family != Family::none;
  if (big.size() == 2)
    return is_complete(induced(g, big[0])) && is_complete(induced(g, big[1]));
  return false;
}

bool in_g1(const Graph& g) { return g.order() >= 2 && in_gamma_le1(g); }

namespace {

bool same_parity(int m, int n, int o) { return m % 2 == n % 2 && n % 2 == o % 2; }

}  // namespace

const std::vector<G2Clause>& g2_clauses(Family f) {
  static const std::vector<G2Clause> tripartite{
      {"m, n, o >= 2 with the same parity",
       [](int m, int n, int o) { return m >= 2 && n >= 2 && o >= 2 && same_parity(m, n, o); }},
      {"m, n >= 3, o = 1, and gcd(m+1, n+1) != 1",
       [](int m, int n, int o) { return m >= 3 && n >= 3 && o == 1 && std::gcd(m + 1, n + 1) != 1; }},
      {"m >= 2, n = o = 1", [](int m, int n, int o) { return m >= 2 && n == 1 && o == 1; }},
      {"m, n >= 2, o = 0, and gcd(m, n) != 1",
       [](int m, int n, int o) { return m >= 2 && n >= 2 && o == 0 && std::gcd(m, n) != 1; }},
      {"m >= 2, n = 2, and o = 0", [](int m, int n, int o) { return m >= 2 && n == 2 && o == 0; }},
      {"m = 2 and n = 1", [](int m, int n, int) { return m == 2 && n == 1; }},
  };
  static const std::vector<G2Clause> t_join{
      {"m, n, o >= 2 with the same parity",
       [](int m, int n, int o) { return m >= 2 && n >= 2 && o >= 2 && same_parity(m, n, o); }},
      {"m, o >= 2, n = 1, and gcd(m+1, o+1) != 1",
       [](int m, int n, int o) { return m >= 2 && o >= 2 && n == 1 && std::gcd(m + 1, o + 1) != 1; }},
      {"m, n >= 2, o = 1, and gcd(m+1, n-1) != 1",
       [](int m, int n, int o) { return m >= 2 && n >= 2 && o == 1 && std::gcd(m + 1, n - 1) != 1; }},
      {"m >= 1, n = o = 1", [](int m, int n, int o) { return m >= 1 && n == 1 && o == 1; }},
      {"n >= 1, m = o = 1", [](int m, int n, int o) { return n >= 1 && m == 1 && o == 1; }},
      {"m, n >= 3, o = 0, and gcd(m, n) != 1",
       [](int m, int n, int o) { return m >= 3 && n >= 3 && o == 0 && std::gcd(m, n) != 1; }},
      {"m >= 2, n = 2, o = 0", [](int m, int n, int o) { return m >= 2 && n == 2 && o == 0; }},
      {"m = 2, n >= 2, o = 0", [](int m, int n, int o) { return m == 2 && n >= 2 && o == 0; }},
  };
  if (f == Family::tripartite) return tripartite;
  if (f == Family::t_join) return t_join;
  throw std::invalid_argument("no clause list for this family");
}

G2Verdict in_g2(const Graph& g) {
  if (!g.is_simple()) throw std::invalid_argument("classification needs a simple graph");
  G2Verdict v;
  for (const FamilyMembership& fm : family_parameterizations(g)) {
    const auto& clauses = g2_clauses(fm.family);
    for (size_t i = 0; i < clauses.size(); ++i) {
      if (!clauses[i].holds(fm.m, fm.n, fm.o)) continue;
      v.member = true;
      v.family = fm.family;
      v.m = fm.m;
      v.n = fm.n;
      v.o = fm.o;
      v.clause = static_cast<int>(i);
      v.clause_text = clauses[i].text;
      v.evidence = "m=" + std::to_string(fm.m) + ", n=" + std::to_string(fm.n) +
                   ", o=" + std::to_string(fm.o);
      if (fm.family == Family::tripartite && i == 1)
        v.evidence += ", gcd(" + std::to_string(fm.m + 1) + "," + std::to_string(fm.n + 1) +
                      ")=" + std::to_string(std::gcd(fm.m + 1, fm.n + 1));
      if (i == 0) v.evidence += fm.m % 2 ? ", all odd" : ", all even";
      if (fm.family == Family::tripartite && i == 3)
        v.evidence += ", gcd(" + std::to_string(fm.m) + "," + std::to_string(fm.n) +
                      ")=" + std::to_string(std::gcd(fm.m, fm.n));
      if (fm.family == Family::t_join && i == 1)
        v.evidence += ", gcd(" + std::to_string(fm.m + 1) + "," + std::to_string(fm.o + 1) +
                      ")=" + std::to_string(std::gcd(fm.m + 1, fm.o + 1));
      if (fm.family == Family::t_join && i == 2)
        v.evidence += ", gcd(" + std::to_string(fm.m + 1) + "," + std::to_string(fm.n - 1) +
                      ")=" + std::to_string(std::gcd(fm.m + 1, fm.n - 1));
      if (fm.family == Family::t_join && i == 5)
        v.evidence += ", gcd(" + std::to_string(fm.m) + "," + std::to_string(fm.n) +
                      ")=" + std::to_string(std::gcd(fm.m, fm.n));
      return v;
    }
  }
  return v;
}

}  // namespace critid
