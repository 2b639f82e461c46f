#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "critid/graph.hpp"
#include "critid/ideal.hpp"

namespace critid {

// Symbolic matrix with the vertex variable x_u at (u,u) and -multiplicity off
// the diagonal. Defined for multigraphs too.
PolyMatrix generalized_laplacian(const Graph& g);

struct MinorSet {
  int k = 0;
  // nonzero determinants det L[I;J], deduplicated up to sign (leading
  // coefficient positive), ascending
  std::vector<Polynomial> minors;
  // row/column masks of the first submatrix found with determinant +-1
  std::optional<std::pair<std::uint16_t, std::uint16_t>> unit;
  // true when enumeration stopped at the unit, leaving `minors` partial
  bool stopped_early = false;
};

// Minor enumeration for one graph; the shared memo makes overlapping minors
// (and successive k) cheap. Graph order at most 16.
class LaplacianMinors {
 public:
  explicit LaplacianMinors(const Graph& g);

  const PolyMatrix& matrix() const { return m_; }
  // All k x k minors over row set I and column set J; symmetry makes I <= J
  // enough. With stop_at_unit, returns as soon as some minor is +-1.
  MinorSet k_minors(int k, bool stop_at_unit = false);
  Polynomial minor_det(std::uint16_t rows, std::uint16_t cols);

 private:
  int n_;
  PolyMatrix m_;
  DeterminantMemo memo_;
};

MinorSet k_minors(const Graph& g, int k);

// k <= 0 gives <1>, k > n gives <0>, otherwise the ideal of the k-minors.
Ideal critical_ideal(const Graph& g, int k);

enum class DecisionMethod {
  convention,         // index outside 1..n
  unit_minor,         // a +-1 minor was scanned directly
  constant_gcd,       // constant minors alone decide
  single_generator,   // principal ideal, non-constant generator
  modp_witness,       // common root mod p refutes triviality
  groebner_basis      // full basis computation
};

struct CorankStep {
  int k = 0;
  bool trivial = false;
  DecisionMethod method = DecisionMethod::groebner_basis;
  std::optional<std::pair<std::uint16_t, std::uint16_t>> unit_minor;
  std::vector<long> witness_point;
  long witness_modulus = 0;
  size_t generator_count = 0;
  double seconds = 0;
};

struct CorankResult {
  int gamma = 0;               // number of trivial critical ideals
  std::vector<CorankStep> steps;
};

// Trivial ideals form the prefix I_1, ..., I_gamma by nesting, so the scan
// stops at the first non-trivial index unless all_indices asks for every k.
CorankResult algebraic_corank(const Graph& g, bool all_indices = false,
                              const GroebnerBudget& budget = default_budget());
int corank(const Graph& g);

// gamma drops strictly for every single-vertex deletion. Pre: simple.
bool is_gamma_critical(const Graph& g);

// Generators of I_i(disjoint_union(g, h)) assembled from the factors' critical
// ideals: products I_j(g) * I_{i-j}(h) over j.
Ideal disjoint_union_ideal(const Graph& g, const Graph& h, int i);

// Checks gamma additivity over a disjoint union and, for every index, that
// the product construction generates the same ideal as direct minors.
bool gamma_disjoint_sum_check(const Graph& g, const Graph& h);

// Connected graphs on at most n_max vertices with gamma = k+1 that are
// gamma-critical, i.e. the minimal forbidden graphs for "gamma <= k" at this
// scale. Pre: k <= 3, n_max <= 7.
std::vector<Graph> forb_search(int k, int n_max);

}  // namespace critid
