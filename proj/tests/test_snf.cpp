#include <doctest.h>

#include <random>

#include "critid/snf.hpp"
#include "oracles.hpp"

using namespace critid;

namespace {

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

std::vector<mpz_class> factors(const std::vector<long>& v) {
  return std::vector<mpz_class>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("laplacian shape") {
  IntMatrix l = integer_laplacian(path(3));
  CHECK(l.at(0, 0) == 1);
  CHECK(l.at(1, 1) == 2);
  CHECK(l.at(0, 1) == -1);
  CHECK(l.at(0, 2) == 0);
  // row sums vanish
  for (int i = 0; i < 3; ++i) CHECK(l.at(i, 0) + l.at(i, 1) + l.at(i, 2) == 0);
  IntMatrix r = reduced_laplacian(path(3));
  CHECK(r.rows == 2);
  CHECK(r.at(1, 1) == 2);
  // multigraph degrees count multiplicity
  Graph mg(2);
  mg.add_edge(0, 1, 3);
  CHECK(integer_laplacian(mg).at(0, 0) == 3);
  CHECK(integer_laplacian(mg).at(0, 1) == -3);
}

TEST_CASE("smith normal form on fixed matrices") {
  CHECK(smith_normal_form(from_rows({{1, 0}, {0, 1}})) == factors({1, 1}));
  CHECK(smith_normal_form(from_rows({{0, 0}, {0, 0}})) == factors({0, 0}));
  CHECK(smith_normal_form(from_rows({{4, 0}, {0, 6}})) == factors({2, 12}));
  CHECK(smith_normal_form(from_rows({{2, 1}, {1, 2}})) == factors({1, 3}));
  CHECK(smith_normal_form(from_rows({{-3}})) == factors({3}));
  CHECK(smith_normal_form(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})) ==
        factors({2, 6, 12}));
  // rectangular, rank-deficient
  CHECK(smith_normal_form(from_rows({{1, 2, 3}, {2, 4, 6}})) == factors({1, 0}));
  CHECK(smith_normal_form(from_rows({{6}, {10}, {15}})) == factors({1}));
}

TEST_CASE("divisibility chain and determinantal divisors on random matrices") {
  std::mt19937 rng(55);
  std::uniform_int_distribution<int> entry(-5, 5), dim(1, 4);
  for (int rep = 0; rep < 60; ++rep) {
    IntMatrix m(dim(rng), dim(rng));
    for (auto& x : m.a) x = entry(rng);
    auto d = smith_normal_form(m);
    for (size_t i = 0; i + 1 < d.size(); ++i) {
      CHECK(d[i] >= 0);
      if (d[i] == 0)
        CHECK(d[i + 1] == 0);
      else
        CHECK(d[i + 1] % d[i] == 0);
    }
    // product of the first k factors is the gcd of all k x k minors
    mpz_class prod = 1;
    for (int k = 1; k <= static_cast<int>(d.size()); ++k) {
      prod *= d[k - 1];
      CHECK(prod == determinantal_divisor(m, k));
    }
  }
  CHECK(determinantal_divisor(from_rows({{5}}), 0) == 1);
  CHECK(determinantal_divisor(from_rows({{5}}), 2) == 0);
}

TEST_CASE("critical groups of complete graphs") {
  CHECK(critical_group(complete(2)).str() == "trivial");
  CHECK(critical_group(complete(4)).factors == factors({1, 4, 4}));
  CHECK(critical_group(complete(5)).factors == factors({1, 5, 5, 5}));
  CHECK(critical_group(complete(5)).str() == "Z_5 x Z_5 x Z_5");
  CHECK(critical_group(trivial(1)).str() == "trivial");
  CHECK_THROWS_AS(critical_group(trivial(2)), std::invalid_argument);
}

TEST_CASE("critical groups of complete graphs minus a matching") {
  // diamond
  CHECK(critical_group(matching_removed(4, 1)).factors == factors({1, 1, 8}));
  // the two shapes of the matching family
  CHECK(critical_group(matching_removed(5, 2)).factors == factors({1, 1, 3, 15}));
  CHECK(critical_group(matching_removed(6, 2)).factors == factors({1, 1, 1, 24, 24}));
  CHECK(critical_group(matching_removed(7, 3)).factors == factors({1, 1, 1, 5, 35, 35}));
  CHECK(critical_group(matching_removed(8, 3)).factors == factors({1, 1, 1, 1, 48, 48, 48}));
  CHECK(f_count(matching_removed(5, 2), 1) == 2);
  CHECK(f_count(matching_removed(6, 2), 1) == 3);
  CHECK(f_count(complete(4), 4) == 2);
}

TEST_CASE("path critical groups are trivial") {
  for (int n = 2; n <= 6; ++n) CHECK(critical_group(path(n)).str() == "trivial");
}

TEST_CASE("group order equals the spanning tree count") {
  std::mt19937 rng(123);
  int done = 0;
  while (done < 20) {
    Graph g = oracle::random_graph(5, 0.6, rng);
    if (!is_connected(g)) continue;
    ++done;
    auto d = smith_normal_form(reduced_laplacian(g));
    mpz_class order = 1;
    for (const auto& x : d) order *= x;
    CHECK(order == determinantal_divisor(reduced_laplacian(g), 4));
    // base vertex does not matter
    for (int b = 0; b < 5; ++b)
      CHECK(critical_group(g, b).factors == critical_group(g).factors);
  }
  // Cayley's count for complete graphs
  auto d6 = smith_normal_form(reduced_laplacian(complete(6)));
  mpz_class order = 1;
  for (const auto& x : d6) order *= x;
  CHECK(order == 1296);  // 6^4
}
