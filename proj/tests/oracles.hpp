// Test-only reference implementations, deliberately independent of the
// library's algorithms: slow, obvious, and used to validate fast paths.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "critid/graph.hpp"
#include "critid/poly.hpp"

namespace oracle {

// Determinant as the signed sum over all permutations.
inline critid::Polynomial det_by_permutations(const critid::PolyMatrix& m) {
  using critid::Polynomial;
  int n = m.rows;
  int nv = n ? m.at(0, 0).nvars() : 0;
  auto ord = n ? m.at(0, 0).order() : critid::MonomialOrder::degrevlex;
  Polynomial acc = Polynomial::zero(nv, ord);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Polynomial prod = Polynomial::constant(1, nv, ord);
    for (int i = 0; i < n; ++i) prod = prod * m.at(i, perm[i]);
    acc = (inversions % 2) ? acc - prod : acc + prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// Induced-subgraph containment by trying every injection.
inline bool contains_induced_brute(const critid::Graph& g, const critid::Graph& p) {
  int n = g.order(), h = p.order();
  if (h > n) return false;
  std::vector<bool> sel(n, false);
  std::fill(sel.begin(), sel.begin() + h, true);
  std::sort(sel.begin(), sel.end());  // iterate subsets via permutations of the mask
  do {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (sel[i]) subset.push_back(i);
    std::sort(subset.begin(), subset.end());
    do {
      bool ok = true;
      for (int i = 0; i < h && ok; ++i)
        for (int j = i + 1; j < h && ok; ++j)
          ok = g.adjacent(subset[i], subset[j]) == p.adjacent(i, j);
      if (ok) return true;
    } while (std::next_permutation(subset.begin(), subset.end()));
  } while (std::next_permutation(sel.begin(), sel.end()));
  return false;
}

// Number of isomorphism classes of connected graphs on n vertices, by brute
// enumeration of all labeled graphs and full-permutation canonical codes.
inline size_t count_connected_classes_brute(int n) {
  int pairs = n * (n - 1) / 2;
  std::set<unsigned> classes;
  std::vector<std::pair<int, int>> pairlist;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairlist.emplace_back(u, v);
  std::vector<int> perm(n);
  for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
    critid::Graph g(n);
    for (int b = 0; b < pairs; ++b)
      if (mask & (1u << b)) g.add_edge(pairlist[b].first, pairlist[b].second);
    if (!critid::is_connected(g)) continue;
    unsigned best = ~0u;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      unsigned code = 0;
      for (int b = 0; b < pairs; ++b)
        code = (code << 1) | unsigned(g.adjacent(perm[pairlist[b].first], perm[pairlist[b].second]));
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return classes.size();
}

inline critid::Graph random_graph(int n, double p, std::mt19937& rng) {
  critid::Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline critid::Polynomial random_poly(int nvars, int nterms, std::mt19937& rng,
                                      critid::MonomialOrder ord = critid::MonomialOrder::degrevlex) {
  using critid::Polynomial;
  std::uniform_int_distribution<int> expo(0, 2), coeff(-5, 5);
  Polynomial acc = Polynomial::zero(nvars, ord);
  for (int t = 0; t < nterms; ++t) {
    critid::Monomial m(nvars, 0);
    for (int i = 0; i < nvars; ++i) m[i] = static_cast<std::uint8_t>(expo(rng));
    acc = acc + Polynomial::term(coeff(rng), m, ord);
  }
  return acc;
}

}  // namespace oracle
