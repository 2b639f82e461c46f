#include "critid/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace critid {

int total_degree(const Monomial& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint8_t>(r[i] + b[i]);
  return r;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial r(b);
  for (size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint8_t>(r[i] - a[i]);
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], b[i]);
  return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  if (ord == MonomialOrder::lex) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db ? 1 : -1;
  // degrevlex: at the last differing variable, the smaller exponent wins
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

Polynomial Polynomial::zero(int nvars, MonomialOrder ord) {
  Polynomial p;
  p.nvars_ = nvars;
  p.order_ = ord;
  return p;
}

Polynomial Polynomial::constant(mpz_class c, int nvars, MonomialOrder ord) {
  Polynomial p = zero(nvars, ord);
  if (c != 0) p.terms_.push_back({Monomial(nvars, 0), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(int v, int nvars, MonomialOrder ord) {
  if (v < 0 || v >= nvars) throw std::invalid_argument("variable index out of range");
  Polynomial p = zero(nvars, ord);
  Monomial m(nvars, 0);
  m[v] = 1;
  p.terms_.push_back({std::move(m), mpz_class(1)});
  return p;
}

Polynomial Polynomial::term(mpz_class c, Monomial m, MonomialOrder ord) {
  Polynomial p = zero(static_cast<int>(m.size()), ord);
  if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

mpz_class Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
  return terms_[0].coeff;
}

bool Polynomial::is_unit_constant() const {
  return terms_.size() == 1 && total_degree(terms_[0].mono) == 0 &&
         (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_[0];
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, total_degree(t.mono));
  return d;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
    return mono_cmp(a.mono, b.mono, order_) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

static void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars() || a.order() != b.order())
    throw std::invalid_argument("polynomial ring mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(*this, o);
  Polynomial r = zero(nvars_, order_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = mono_cmp(terms_[i].mono, o.terms_[j].mono, order_);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      mpz_class s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(*this, o);
  Polynomial r = zero(nvars_, order_);
  if (is_zero() || o.is_zero()) return r;
  for (const auto& s : terms_)
    for (const auto& t : o.terms_)
      r.terms_.push_back({mono_mul(s.mono, t.mono), s.coeff * t.coeff});
  r.normalize();
  return r;
}

Polynomial Polynomial::scaled(const mpz_class& c) const {
  Polynomial r = zero(nvars_, order_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

Polynomial Polynomial::times_term(const mpz_class& c, const Monomial& m) const {
  Polynomial r = zero(nvars_, order_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({mono_mul(t.mono, m), t.coeff * c});
  // multiplying by a fixed term preserves the descending order
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

mpz_class Polynomial::evaluate(const std::vector<mpz_class>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluation point has wrong dimension");
  mpz_class acc = 0, pw;
  for (const auto& t : terms_) {
    mpz_class v = t.coeff;
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < t.mono[i]; ++e) v *= point[i];
    acc += v;
  }
  return acc;
}

mpz_class Polynomial::evaluate(const std::map<int, mpz_class>& assignment) const {
  mpz_class acc = 0;
  for (const auto& t : terms_) {
    mpz_class v = t.coeff;
    for (int i = 0; i < nvars_; ++i) {
      if (t.mono[i] == 0) continue;
      auto it = assignment.find(i);
      if (it == assignment.end())
        throw std::invalid_argument("evaluation missing variable x" + std::to_string(i + 1));
      for (int e = 0; e < t.mono[i]; ++e) v *= it->second;
    }
    acc += v;
  }
  return acc;
}

Polynomial Polynomial::abs_normalized() const {
  if (!terms_.empty() && terms_[0].coeff < 0) return -*this;
  return *this;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpz_class c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    bool has_vars = total_degree(t.mono) > 0;
    if (!has_vars || c != 1) {
      os << c.get_str();
      if (has_vars) os << "*";
    }
    bool star = false;
    for (int i = 0; i < nvars_; ++i) {
      if (t.mono[i] == 0) continue;
      if (star) os << "*";
      star = true;
      if (i < static_cast<int>(names.size()) && !names[i].empty())
        os << names[i];
      else
        os << "x" << i + 1;
      if (t.mono[i] > 1) os << "^" << int(t.mono[i]);
    }
  }
  return os.str();
}

int compare(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_ ? -1 : 1;
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = mono_cmp(a.terms_[i].mono, b.terms_[i].mono, a.order_);
    if (c != 0) return c;
    int s = cmp(a.terms_[i].coeff, b.terms_[i].coeff);
    if (s != 0) return s;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

// --- parsing ---------------------------------------------------------------

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  const std::map<std::string, int>& vars;
  int nvars;
  MonomialOrder ord;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) +
                                ": " + why);
  }

  Polynomial expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Polynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (eat('^')) {
      long e = integer();
      if (e < 0) fail("negative exponent");
      Polynomial r = Polynomial::constant(1, nvars, ord);
      for (long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Polynomial primary() {
    char c = peek();
    if (c == '(') {
      ++pos;
      Polynomial inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(integer(), nvars, ord);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '#'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      auto it = vars.find(name);
      if (it == vars.end()) fail("unknown variable '" + name + "'");
      return Polynomial::variable(it->second, nvars, ord);
    }
    fail("unexpected character");
  }

  long integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return std::stol(s.substr(start, pos - start));
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::map<std::string, int>& vars,
                            int nvars, MonomialOrder ord) {
  Parser p{text, 0, vars, nvars, ord};
  Polynomial r = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

// --- determinants ----------------------------------------------------------

DeterminantMemo::DeterminantMemo(const PolyMatrix& m) : m_(m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows > 16) throw std::invalid_argument("matrix side > 16 unsupported");
  int nv = m.rows ? m.at(0, 0).nvars() : 0;
  MonomialOrder ord = m.rows ? m.at(0, 0).order() : MonomialOrder::degrevlex;
  one_ = Polynomial::constant(1, nv, ord);
  zero_ = Polynomial::zero(nv, ord);
  nonzero_cols_.resize(m.rows, 0);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (!m.at(r, c).is_zero()) nonzero_cols_[r] |= std::uint16_t(1u << c);
}

const Polynomial& DeterminantMemo::minor_det(std::uint16_t rowmask, std::uint16_t colmask) {
  if (std::popcount(rowmask) != std::popcount(colmask))
    throw std::invalid_argument("minor requires equally many rows and columns");
  if (rowmask == 0) return one_;
  std::uint32_t key = (std::uint32_t(rowmask) << 16) | colmask;
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  // expand along the active row with fewest active nonzero entries
  int best_row = -1, best_cnt = 17;
  for (int r = 0; r < m_.rows; ++r) {
    if (!(rowmask & (1u << r))) continue;
    int cnt = std::popcount(std::uint16_t(nonzero_cols_[r] & colmask));
    if (cnt < best_cnt) {
      best_cnt = cnt;
      best_row = r;
    }
  }
  if (best_cnt == 0) return memo_.emplace(key, zero_).first->second;

  int row_rank = std::popcount(std::uint16_t(rowmask & ((1u << best_row) - 1)));
  Polynomial acc = zero_;
  std::uint16_t sub_rows = rowmask & ~std::uint16_t(1u << best_row);
  int col_rank = 0;
  for (int c = 0; c < m_.cols; ++c) {
    if (!(colmask & (1u << c))) continue;
    const Polynomial& entry = m_.at(best_row, c);
    if (!entry.is_zero()) {
      const Polynomial& sub = minor_det(sub_rows, colmask & ~std::uint16_t(1u << c));
      Polynomial contrib = entry * sub;
      if ((row_rank + col_rank) & 1)
        acc = acc - contrib;
      else
        acc = acc + contrib;
    }
    ++col_rank;
  }
  return memo_.emplace(key, std::move(acc)).first->second;
}

Polynomial det_symbolic(const PolyMatrix& m) {
  if (m.rows == 0) {
    return Polynomial::constant(1, 0);
  }
  DeterminantMemo memo(m);
  std::uint16_t full = static_cast<std::uint16_t>((1u << m.rows) - 1);
  return memo.minor_det(full, full);
}

}  // namespace critid
