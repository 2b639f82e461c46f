#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "critid/graph.hpp"

namespace critid {

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<mpz_class> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  mpz_class& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const mpz_class& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Laplacian: degree (with multiplicity) on the diagonal, -multiplicity off it.
IntMatrix integer_laplacian(const Graph& g);
// Laplacian with the base vertex's row and column removed (default: last vertex).
IntMatrix reduced_laplacian(const Graph& g, int base = -1);

// Diagonal of the Smith normal form: nonnegative, each entry dividing the
// next, trailing zeros for rank-deficient input. Length min(rows, cols).
// Elementary row/column operations with deterministic smallest-pivot choice.
std::vector<mpz_class> smith_normal_form(IntMatrix m);

// gcd of all k x k minors (0 if all vanish); the k-th determinantal divisor.
mpz_class determinantal_divisor(const IntMatrix& m, int k);

struct CriticalGroup {
  std::vector<mpz_class> factors;  // invariant factors of the reduced Laplacian, 1s retained
  std::string str() const;         // "Z_3 x Z_15"; "trivial" if all factors are 1
};

// Cokernel of the reduced Laplacian. Pre: connected. Independent of base vertex.
CriticalGroup critical_group(const Graph& g, int base = -1);

// Number of invariant factors of critical_group(g) equal to k. Pre: connected.
int f_count(const Graph& g, const mpz_class& k);

}  // namespace critid
