#include "critid/snf.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace critid {

IntMatrix integer_laplacian(const Graph& g) {
  int n = g.order();
  IntMatrix m(n, n);
  for (int u = 0; u < n; ++u) {
    m.at(u, u) = g.degree(u);
    for (int v = 0; v < n; ++v)
      if (v != u) m.at(u, v) = -g.multiplicity(u, v);
  }
  return m;
}

IntMatrix reduced_laplacian(const Graph& g, int base) {
  int n = g.order();
  if (n == 0) throw std::invalid_argument("reduced Laplacian of empty graph");
  if (base == -1) base = n - 1;
  if (base < 0 || base >= n) throw std::out_of_range("base vertex");
  IntMatrix full = integer_laplacian(g);
  IntMatrix m(n - 1, n - 1);
  for (int i = 0, r = 0; i < n; ++i) {
    if (i == base) continue;
    for (int j = 0, c = 0; j < n; ++j) {
      if (j == base) continue;
      m.at(r, c++) = full.at(i, j);
    }
    ++r;
  }
  return m;
}

namespace {

// c = q*a + r, r in (-|a|/2, |a|/2]; used to shrink entries fast
mpz_class symmetric_quotient(const mpz_class& c, const mpz_class& a) {
  mpz_class aa = abs(a);
  mpz_class num = 2 * c - aa, den = 2 * aa, q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (a < 0) q = -q;
  return q;
}

}  // namespace

std::vector<mpz_class> smith_normal_form(IntMatrix m) {
  int n = std::min(m.rows, m.cols);
  std::vector<mpz_class> diag(n, 0);

  for (int r = 0; r < n; ++r) {
    // deterministic pivot: smallest absolute value, ties by row then column
    int pi = -1, pj = -1;
    for (int i = r; i < m.rows; ++i)
      for (int j = r; j < m.cols; ++j) {
        if (m.at(i, j) == 0) continue;
        if (pi == -1 || abs(m.at(i, j)) < abs(m.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi == -1) break;  // all remaining entries zero

    for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pi, j));
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, r), m.at(i, pj));

    for (;;) {
      bool disturbed = false;
      // clear the pivot column
      for (int i = r + 1; i < m.rows && !disturbed; ++i) {
        if (m.at(i, r) == 0) continue;
        mpz_class q = symmetric_quotient(m.at(i, r), m.at(r, r));
        for (int j = r; j < m.cols; ++j) m.at(i, j) -= q * m.at(r, j);
        if (m.at(i, r) != 0) {
          // remainder is smaller than the pivot; promote it
          for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(i, j));
          disturbed = true;
        }
      }
      if (disturbed) continue;
      // clear the pivot row
      for (int j = r + 1; j < m.cols && !disturbed; ++j) {
        if (m.at(r, j) == 0) continue;
        mpz_class q = symmetric_quotient(m.at(r, j), m.at(r, r));
        for (int i = r; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, r);
        if (m.at(r, j) != 0) {
          for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, r), m.at(i, j));
          disturbed = true;
        }
      }
      if (disturbed) continue;
      // pivot must divide everything below-right for the divisibility chain
      bool fixed = false;
      for (int i = r + 1; i < m.rows && !fixed; ++i)
        for (int j = r + 1; j < m.cols && !fixed; ++j)
          if (m.at(i, j) % m.at(r, r) != 0) {
            for (int jj = 0; jj < m.cols; ++jj) m.at(r, jj) += m.at(i, jj);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (m.at(r, r) < 0)
      for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
    diag[r] = m.at(r, r);
  }
  return diag;
}

namespace {

class IntDetMemo {
 public:
  explicit IntDetMemo(const IntMatrix& m) : m_(m) {
    nonzero_cols_.resize(m.rows, 0);
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < m.cols; ++c)
        if (m.at(r, c) != 0) nonzero_cols_[r] |= std::uint16_t(1u << c);
  }

  const mpz_class& det(std::uint16_t rowmask, std::uint16_t colmask) {
    static const mpz_class one = 1, zero = 0;
    if (rowmask == 0) return one;
    std::uint32_t key = (std::uint32_t(rowmask) << 16) | colmask;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    int best_row = -1, best_cnt = 17;
    for (int r = 0; r < m_.rows; ++r) {
      if (!(rowmask & (1u << r))) continue;
      int cnt = std::popcount(std::uint16_t(nonzero_cols_[r] & colmask));
      if (cnt < best_cnt) {
        best_cnt = cnt;
        best_row = r;
      }
    }
    if (best_cnt == 0) return memo_.emplace(key, zero).first->second;
    int row_rank = std::popcount(std::uint16_t(rowmask & ((1u << best_row) - 1)));
    mpz_class acc = 0;
    std::uint16_t sub_rows = rowmask & ~std::uint16_t(1u << best_row);
    int col_rank = 0;
    for (int c = 0; c < m_.cols; ++c) {
      if (!(colmask & (1u << c))) continue;
      if (m_.at(best_row, c) != 0) {
        const mpz_class& sub = det(sub_rows, colmask & ~std::uint16_t(1u << c));
        if ((row_rank + col_rank) & 1)
          acc -= m_.at(best_row, c) * sub;
        else
          acc += m_.at(best_row, c) * sub;
      }
      ++col_rank;
    }
    return memo_.emplace(key, std::move(acc)).first->second;
  }

 private:
  const IntMatrix& m_;
  std::vector<std::uint16_t> nonzero_cols_;
  std::unordered_map<std::uint32_t, mpz_class> memo_;
};

void subsets_of_size(int n, int k, const std::function<void(std::uint16_t)>& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    std::uint16_t mask = 0;
    for (int i : idx) mask |= std::uint16_t(1u << i);
    fn(mask);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

mpz_class determinantal_divisor(const IntMatrix& m, int k) {
  if (k <= 0) return 1;
  if (k > std::min(m.rows, m.cols)) return 0;
  if (m.rows > 16 || m.cols > 16) throw std::invalid_argument("matrix side > 16 unsupported");
  IntDetMemo memo(m);
  mpz_class g = 0;
  subsets_of_size(m.rows, k, [&](std::uint16_t rmask) {
    subsets_of_size(m.cols, k, [&](std::uint16_t cmask) {
      const mpz_class& d = memo.det(rmask, cmask);
      if (d != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    });
  });
  return g;
}

std::string CriticalGroup::str() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& d : factors) {
    if (d == 1) continue;
    if (any) os << " x ";
    os << "Z_" << d.get_str();
    any = true;
  }
  return any ? os.str() : "trivial";
}

CriticalGroup critical_group(const Graph& g, int base) {
  if (!is_connected(g)) throw std::invalid_argument("critical group requires a connected graph");
  CriticalGroup cg;
  if (g.order() == 1) return cg;
  cg.factors = smith_normal_form(reduced_laplacian(g, base));
  return cg;
}

int f_count(const Graph& g, const mpz_class& k) {
  CriticalGroup cg = critical_group(g);
  return static_cast<int>(std::count(cg.factors.begin(), cg.factors.end(), k));
}

}  // namespace critid
