#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "critid/poly.hpp"

namespace critid {

// Raised when the Groebner pair budget is exceeded. Callers must treat this
// as "undecided", never as a triviality verdict.
struct budget_exhausted : std::runtime_error {
  long pairs_processed;
  int ideal_index = 0;  // offending critical ideal index when known
  explicit budget_exhausted(long pairs)
      : std::runtime_error("groebner pair budget exhausted after " + std::to_string(pairs) +
                           " pairs"),
        pairs_processed(pairs) {}
};

struct GroebnerBudget {
  long max_pairs = 200000;
};
// Default budget; the CRITID_BUDGET environment variable overrides (read once).
GroebnerBudget default_budget();

// Finitely generated ideal of Z[x_1..x_n]. Zero generators are dropped on
// construction; an empty list is the zero ideal.
class Ideal {
 public:
  Ideal() = default;
  Ideal(std::vector<Polynomial> gens, int nvars, MonomialOrder ord = MonomialOrder::degrevlex);

  const std::vector<Polynomial>& generators() const { return gens_; }
  int nvars() const { return nvars_; }
  MonomialOrder order() const { return order_; }
  bool is_zero_ideal() const { return gens_.empty(); }

 private:
  std::vector<Polynomial> gens_;
  int nvars_ = 0;
  MonomialOrder order_ = MonomialOrder::degrevlex;
};

// Strong Groebner basis over Z: every element of the ideal top-reduces to 0.
// Elements carry positive leading coefficients and ascending order.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(std::vector<Polynomial> elems, int nvars, MonomialOrder ord, bool reduced);

  const std::vector<Polynomial>& elements() const { return elems_; }
  int nvars() const { return nvars_; }
  MonomialOrder order() const { return order_; }
  bool reduced() const { return reduced_; }
  bool contains_unit() const;

 private:
  std::vector<Polynomial> elems_;
  int nvars_ = 0;
  MonomialOrder order_ = MonomialOrder::degrevlex;
  bool reduced_ = false;
};

// Buchberger with S-polynomials and GCD-polynomials, normal pair selection
// (smallest lcm first), early exit on a unit, final interreduction.
GroebnerBasis groebner(const Ideal& ideal, const GroebnerBudget& budget = default_budget());

// Full normal form: every term irreducible w.r.t. the basis under the
// symmetric-remainder convention (coefficients land in (-a/2, a/2]).
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

struct TrivialityCertificate {
  bool trivial = false;
  enum class Via { unit_generator, constant_gcd, single_generator, witness, groebner } via =
      Via::groebner;
  // Set when via == witness: a point of F_p^n where all generators vanish
  // mod p, certifying 1 is not in the ideal.
  std::vector<long> witness_point;
  long witness_modulus = 0;
};

// Staged decision: unit generator scan, constant gcd, single-generator rule,
// mod-p witness search, then Groebner as the complete decider.
TrivialityCertificate is_trivial_with_certificate(const Ideal& ideal,
                                                  const GroebnerBudget& budget = default_budget());
bool is_trivial(const Ideal& ideal, const GroebnerBudget& budget = default_budget());

// inner subseteq outer, decided by normal forms against a strong basis of outer.
bool contains(const Ideal& outer, const Ideal& inner,
              const GroebnerBudget& budget = default_budget());
bool equal(const Ideal& a, const Ideal& b, const GroebnerBudget& budget = default_budget());

}  // namespace critid
