#include "critid/critical.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <set>
#include <stdexcept>

namespace critid {

PolyMatrix generalized_laplacian(const Graph& g) {
  int n = g.order();
  PolyMatrix m(n, n, n);
  for (int u = 0; u < n; ++u) {
    m.at(u, u) = Polynomial::variable(u, n);
    for (int v = 0; v < n; ++v)
      if (v != u && g.multiplicity(u, v) > 0)
        m.at(u, v) = Polynomial::constant(-g.multiplicity(u, v), n);
  }
  return m;
}

LaplacianMinors::LaplacianMinors(const Graph& g)
    : n_(g.order()), m_(generalized_laplacian(g)), memo_(m_) {
  if (n_ > 16) throw std::invalid_argument("minor enumeration caps at 16 vertices");
}

namespace {

// next integer with the same popcount (Gosper's hack); pre: v != 0
std::uint32_t next_same_popcount(std::uint32_t v) {
  std::uint32_t t = v | (v - 1);
  return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

}  // namespace

MinorSet LaplacianMinors::k_minors(int k, bool stop_at_unit) {
  if (k < 1 || k > n_) throw std::out_of_range("minor size out of 1..n");
  MinorSet out;
  out.k = k;
  std::set<Polynomial, PolyLess> seen;
  const std::uint32_t limit = 1u << n_;
  for (std::uint32_t rows = (1u << k) - 1; rows < limit; rows = next_same_popcount(rows)) {
    for (std::uint32_t cols = rows; cols < limit; cols = next_same_popcount(cols)) {
      const Polynomial& d =
          memo_.minor_det(static_cast<std::uint16_t>(rows), static_cast<std::uint16_t>(cols));
      if (d.is_zero()) continue;
      if (!out.unit && d.is_unit_constant()) {
        out.unit = {static_cast<std::uint16_t>(rows), static_cast<std::uint16_t>(cols)};
        if (stop_at_unit) {
          seen.insert(d.abs_normalized());
          out.minors.assign(seen.begin(), seen.end());
          out.stopped_early = true;
          return out;
        }
      }
      seen.insert(d.abs_normalized());
    }
  }
  out.minors.assign(seen.begin(), seen.end());
  return out;
}

Polynomial LaplacianMinors::minor_det(std::uint16_t rows, std::uint16_t cols) {
  return memo_.minor_det(rows, cols);
}

MinorSet k_minors(const Graph& g, int k) { return LaplacianMinors(g).k_minors(k); }

Ideal critical_ideal(const Graph& g, int k) {
  int n = g.order();
  if (k < 1) return Ideal({Polynomial::constant(1, n)}, n);
  if (k > n) return Ideal({}, n);
  return Ideal(k_minors(g, k).minors, n);
}

CorankResult algebraic_corank(const Graph& g, bool all_indices, const GroebnerBudget& budget) {
  CorankResult res;
  int n = g.order();
  if (n == 0) return res;
  LaplacianMinors lm(g);
  bool prefix_trivial = true;
  for (int k = 1; k <= n; ++k) {
    auto t0 = std::chrono::steady_clock::now();
    CorankStep step;
    step.k = k;
    MinorSet ms = lm.k_minors(k, /*stop_at_unit=*/true);
    step.generator_count = ms.minors.size();
    if (ms.unit) {
      step.trivial = true;
      step.method = DecisionMethod::unit_minor;
      step.unit_minor = ms.unit;
    } else {
      TrivialityCertificate cert;
      try {
        cert = is_trivial_with_certificate(Ideal(ms.minors, n), budget);
      } catch (budget_exhausted& e) {
        e.ideal_index = k;
        throw;
      }
      step.trivial = cert.trivial;
      switch (cert.via) {
        case TrivialityCertificate::Via::unit_generator:
          step.method = DecisionMethod::unit_minor;
          break;
        case TrivialityCertificate::Via::constant_gcd:
          step.method = DecisionMethod::constant_gcd;
          break;
        case TrivialityCertificate::Via::single_generator:
          step.method = DecisionMethod::single_generator;
          break;
        case TrivialityCertificate::Via::witness:
          step.method = DecisionMethod::modp_witness;
          step.witness_point = cert.witness_point;
          step.witness_modulus = cert.witness_modulus;
          break;
        case TrivialityCertificate::Via::groebner:
          step.method = DecisionMethod::groebner_basis;
          break;
      }
    }
    step.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool trivial = step.trivial;
    res.steps.push_back(std::move(step));
    if (trivial && prefix_trivial) res.gamma = k;
    if (!trivial) {
      prefix_trivial = false;
      if (!all_indices) break;
    }
  }
  return res;
}

int corank(const Graph& g) { return algebraic_corank(g).gamma; }

bool is_gamma_critical(const Graph& g) {
  if (!g.is_simple())
    throw std::invalid_argument("gamma criticality is defined for simple graphs");
  int g0 = corank(g);
  if (g0 == 0) return false;  // deletions cannot push gamma below zero
  // gamma(G - v) < g0 exactly when I_{g0}(G - v) is non-trivial, by nesting
  for (int v = 0; v < g.order(); ++v)
    if (is_trivial(critical_ideal(delete_vertex(g, v), g0))) return false;
  return true;
}

namespace {

Polynomial embed(const Polynomial& p, int offset, int total) {
  Polynomial out = Polynomial::zero(total, p.order());
  for (const auto& t : p.terms()) {
    Monomial m(total, 0);
    for (int i = 0; i < p.nvars(); ++i) m[offset + i] = t.mono[i];
    out = out + Polynomial::term(t.coeff, m, p.order());
  }
  return out;
}

}  // namespace

Ideal disjoint_union_ideal(const Graph& g, const Graph& h, int i) {
  int ng = g.order(), n = ng + h.order();
  if (i < 1) return Ideal({Polynomial::constant(1, n)}, n);
  if (i > n) return Ideal({}, n);
  std::set<Polynomial, PolyLess> gens;
  for (int j = 0; j <= i; ++j) {
    // out-of-range indices contribute <0> or <1> via the ideal conventions
    Ideal a = critical_ideal(g, j), b = critical_ideal(h, i - j);
    for (const auto& p : a.generators())
      for (const auto& q : b.generators())
        gens.insert((embed(p, 0, n) * embed(q, ng, n)).abs_normalized());
  }
  return Ideal({gens.begin(), gens.end()}, n);
}

bool gamma_disjoint_sum_check(const Graph& g, const Graph& h) {
  Graph u = disjoint_union(g, h);
  if (corank(u) != corank(g) + corank(h)) return false;
  for (int i = 1; i <= u.order(); ++i)
    if (!equal(critical_ideal(u, i), disjoint_union_ideal(g, h, i))) return false;
  return true;
}

std::vector<Graph> forb_search(int k, int n_max) {
  if (k < 0 || k > 3 || n_max < 1 || n_max > 7)
    throw std::invalid_argument("forb_search handles k <= 3 and n_max <= 7");
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n)
    for (const Graph& g : enumerate_connected(n))
      if (corank(g) == k + 1 && is_gamma_critical(g)) out.push_back(g);
  return out;
}

}  // namespace critid
