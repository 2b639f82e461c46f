#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

namespace critid {

// Term orders on power products. Variable priority is vertex index ascending
// (x1 > x2 > ... under both orders).
enum class MonomialOrder { degrevlex, lex };

// Exponent vector; length = number of variables of the ambient ring.
using Monomial = std::vector<std::uint8_t>;

int total_degree(const Monomial& m);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& b, const Monomial& a);  // pre: a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

// Returns <0, 0, >0 as a <, =, > b under the given order.
int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder ord);

struct Term {
  Monomial mono;
  mpz_class coeff;  // never zero in a normalized polynomial
};

// Sparse polynomial in Z[x_0..x_{nvars-1}], terms kept sorted descending
// under the ring's active order so the leading term is terms()[0].
class Polynomial {
 public:
  Polynomial() = default;  // zero in a 0-variable ring

  static Polynomial zero(int nvars, MonomialOrder ord = MonomialOrder::degrevlex);
  static Polynomial constant(mpz_class c, int nvars,
                             MonomialOrder ord = MonomialOrder::degrevlex);
  static Polynomial variable(int v, int nvars,
                             MonomialOrder ord = MonomialOrder::degrevlex);
  static Polynomial term(mpz_class c, Monomial m,
                         MonomialOrder ord = MonomialOrder::degrevlex);

  int nvars() const { return nvars_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].mono) == 0); }
  // Value as a constant; zero polynomial gives 0. Pre: is_constant().
  mpz_class constant_value() const;
  bool is_unit_constant() const;  // +1 or -1

  const Term& leading() const;            // pre: nonzero
  int degree() const;                     // total degree; -1 for zero

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const mpz_class& c) const;
  // this * c*X^m, the workhorse of reduction steps.
  Polynomial times_term(const mpz_class& c, const Monomial& m) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Full evaluation point, one value per variable.
  mpz_class evaluate(const std::vector<mpz_class>& point) const;
  // Partial assignment keyed by variable index; a variable that occurs with
  // positive exponent but has no value is an error.
  mpz_class evaluate(const std::map<int, mpz_class>& assignment) const;

  // Sign-normalized copy: leading coefficient positive.
  Polynomial abs_normalized() const;

  // Deterministic rendering, terms descending, e.g. "x1*x2 - 2*x3 + 1".
  // names[i] labels variable i; empty names fall back to x{i+1}.
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  friend int compare(const Polynomial&, const Polynomial&);
  void normalize();  // sort terms, fuse duplicates, drop zeros
  std::vector<Term> terms_;
  MonomialOrder order_ = MonomialOrder::degrevlex;
  int nvars_ = 0;
};

// Total order on polynomials of one ring (term sequences compared
// lexicographically); used for canonical generator lists.
int compare(const Polynomial& a, const Polynomial& b);
struct PolyLess {
  bool operator()(const Polynomial& a, const Polynomial& b) const { return compare(a, b) < 0; }
};

// Parses "+/-/*/^/()" expressions over integer literals and named variables.
// Unknown identifiers are an error. Exponents are nonnegative integers.
Polynomial parse_polynomial(const std::string& text,
                            const std::map<std::string, int>& vars, int nvars,
                            MonomialOrder ord = MonomialOrder::degrevlex);

struct PolyMatrix {
  int rows = 0, cols = 0;
  std::vector<Polynomial> a;  // row-major

  PolyMatrix() = default;
  PolyMatrix(int r, int c, int nvars, MonomialOrder ord = MonomialOrder::degrevlex)
      : rows(r), cols(c), a(static_cast<size_t>(r) * c, Polynomial::zero(nvars, ord)) {}
  Polynomial& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Polynomial& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Shared Laplace-expansion engine: determinants of all submatrices of one
// matrix, memoized on (row mask, column mask) so overlapping minors reuse
// work. Matrix side must be <= 16.
class DeterminantMemo {
 public:
  explicit DeterminantMemo(const PolyMatrix& m);
  // Pre: popcount(rowmask) == popcount(colmask).
  const Polynomial& minor_det(std::uint16_t rowmask, std::uint16_t colmask);

 private:
  const PolyMatrix& m_;
  std::vector<std::uint16_t> nonzero_cols_;  // per row
  std::unordered_map<std::uint32_t, Polynomial> memo_;
  Polynomial one_, zero_;
};

// Determinant by cofactor expansion with memoized minors. Pre: square.
Polynomial det_symbolic(const PolyMatrix& m);

}  // namespace critid
