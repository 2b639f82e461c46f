#include "critid/minor_tables.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace critid {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

struct TableRow {
  std::string guard;
  std::vector<std::string> patterns;
};

// "guard : pattern ; pattern ; ..." per non-empty line. Only the first colon
// separates; generator quantifiers reuse ':' internally.
std::vector<TableRow> parse_rows(const std::string& source) {
  std::vector<TableRow> rows;
  std::istringstream in(source);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("table row without guard: " + line);
    TableRow row;
    row.guard = trim(line.substr(0, colon));
    std::string rest = line.substr(colon + 1);
    size_t start = 0;
    while (start <= rest.size()) {
      size_t semi = rest.find(';', start);
      std::string pat = trim(semi == std::string::npos ? rest.substr(start)
                                                       : rest.substr(start, semi - start));
      if (pat.empty()) throw std::invalid_argument("empty pattern in table row: " + line);
      row.patterns.push_back(pat);
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Guards: expr := term ('|' term)*, term := atom ('&' atom)*,
// atom := 'true' | '(' expr ')' | {m,n,o} {>=,==,<=} INT.
struct GuardEval {
  const std::string& s;
  size_t pos = 0;
  int m, n, o;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad guard \"" + s + "\": " + why);
  }
  bool expr() {
    bool v = term();
    skip();
    while (pos < s.size() && s[pos] == '|') {
      ++pos;
      bool r = term();
      v = v || r;
      skip();
    }
    return v;
  }
  bool term() {
    bool v = atom();
    skip();
    while (pos < s.size() && s[pos] == '&') {
      ++pos;
      bool r = atom();
      v = v && r;
      skip();
    }
    return v;
  }
  bool atom() {
    skip();
    if (pos >= s.size()) fail("unexpected end");
    if (s.compare(pos, 4, "true") == 0) {
      pos += 4;
      return true;
    }
    if (s[pos] == '(') {
      ++pos;
      bool v = expr();
      skip();
      if (pos >= s.size() || s[pos] != ')') fail("missing ')'");
      ++pos;
      return v;
    }
    char var = s[pos];
    if (var != 'm' && var != 'n' && var != 'o') fail("expected m, n or o");
    ++pos;
    skip();
    if (pos + 1 >= s.size()) fail("truncated comparison");
    std::string op = s.substr(pos, 2);
    if (op != ">=" && op != "==" && op != "<=") fail("expected >=, == or <=");
    pos += 2;
    skip();
    size_t end = pos;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
    if (end == pos) fail("expected integer bound");
    int bound = std::stoi(s.substr(pos, end - pos));
    pos = end;
    int lhs = var == 'm' ? m : var == 'n' ? n : o;
    if (op == ">=") return lhs >= bound;
    if (op == "<=") return lhs <= bound;
    return lhs == bound;
  }
};

bool eval_guard(const std::string& guard, int m, int n, int o) {
  GuardEval g{guard, 0, m, n, o};
  bool v = g.expr();
  g.skip();
  if (g.pos != guard.size()) g.fail("trailing input");
  return v;
}

// A pattern piece is literal text or a variable reference. slot 1..3 is a
// tuple placeholder (x_i2 -> block 0, slot 2); slot 0 is the '#' hole of a
// quantified generator. Concrete references like x_1 fold into the literal.
struct Piece {
  std::string lit;
  int block = -1;
  int slot = -1;
};

int block_of(char c) { return c == 'x' ? 0 : c == 'y' ? 1 : 2; }

std::vector<Piece> split_pattern(const std::string& text) {
  std::vector<Piece> out;
  std::string lit;
  size_t i = 0;
  auto flush = [&] {
    if (!lit.empty()) {
      out.push_back({lit, -1, -1});
      lit.clear();
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if ((c == 'x' || c == 'y' || c == 'z') && i + 1 < text.size() && text[i + 1] == '_') {
      size_t j = i + 2;
      if (j < text.size() && (text[j] == 'i' || text[j] == 'j' || text[j] == 'k') &&
          j + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
        flush();
        out.push_back({"", block_of(c), text[j + 1] - '0'});
        i = j + 2;
        continue;
      }
      if (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        lit += c;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
          lit += text[j++];
        i = j;
        continue;
      }
      if (j < text.size() && text[j] == '#') {
        flush();
        out.push_back({"", block_of(c), 0});
        i = j + 1;
        continue;
      }
      throw std::invalid_argument("bad variable reference in pattern: " + text);
    }
    lit += c;
    ++i;
  }
  flush();
  return out;
}

std::string render(const std::vector<Piece>& pieces,
                   const std::array<std::map<int, int>, 3>& assign) {
  static const char letters[] = {'x', 'y', 'z'};
  std::string out;
  for (const auto& p : pieces) {
    if (p.block < 0) {
      out += p.lit;
    } else {
      out += letters[p.block];
      out += std::to_string(assign[p.block].at(p.slot));
    }
  }
  return out;
}

// All strictly increasing assignments of the used placeholder slots within
// the block sizes; none when a block is too small.
std::vector<Polynomial> instantiate_pattern(const std::string& text,
                                            const std::array<int, 3>& sizes,
                                            const std::map<std::string, int>& vars, int nvars) {
  std::vector<Piece> pieces = split_pattern(text);
  std::array<std::vector<int>, 3> slots;
  for (const auto& p : pieces) {
    if (p.block < 0) continue;
    if (p.slot == 0) throw std::invalid_argument("quantifier hole outside 'all': " + text);
    auto& v = slots[p.block];
    if (std::find(v.begin(), v.end(), p.slot) == v.end()) v.push_back(p.slot);
  }
  for (auto& v : slots) std::sort(v.begin(), v.end());

  std::vector<Polynomial> out;
  std::array<std::map<int, int>, 3> assign;
  auto emit = [&] { out.push_back(parse_polynomial(render(pieces, assign), vars, nvars)); };
  // choose an increasing index tuple for block b's slots, then recurse
  auto choose = [&](auto&& self, int b, size_t t, int from) -> void {
    if (b == 3) {
      emit();
      return;
    }
    if (t == slots[b].size()) {
      self(self, b + 1, 0, 1);
      return;
    }
    for (int idx = from; idx <= sizes[b]; ++idx) {
      assign[b][slots[b][t]] = idx;
      self(self, b, t + 1, idx + 1);
    }
  };
  choose(choose, 0, 0, 1);
  return out;
}

bool two_block(TableFamily f) {
  return f == TableFamily::Kmn || f == TableFamily::KmJoinTn;
}

void require_minor_params(TableFamily f, int m, int n, int o) {
  if (two_block(f)) {
    if (o != 0) throw std::invalid_argument("two-block family takes o = 0");
    if (m < 1 || n < 1) throw hypothesis_error("minor table applies for m, n >= 1");
  } else if (m < 1 || n < 1 || o < 1) {
    throw hypothesis_error("minor table applies for m, n, o >= 1");
  }
}

std::map<std::string, int> var_indices(const Graph& g) {
  std::map<std::string, int> vars;
  auto names = g.variable_names();
  for (size_t i = 0; i < names.size(); ++i) vars[names[i]] = static_cast<int>(i);
  return vars;
}

std::string triple_str(int m, int n, int o) {
  return "(" + std::to_string(m) + ", " + std::to_string(n) + ", " + std::to_string(o) + ")";
}

}  // namespace

Graph table_graph(TableFamily f, int m, int n, int o) {
  switch (f) {
    case TableFamily::Kmn: return complete_multipartite({m, n});
    case TableFamily::Kmno: return complete_multipartite({m, n, o});
    case TableFamily::KmJoinTn: return t_join_cliques(n, m, 0);
    case TableFamily::TnJoinKmKo: return t_join_cliques(n, m, o);
  }
  throw std::invalid_argument("unknown table family");
}

std::vector<Polynomial> expected_3minors(TableFamily f, int m, int n, int o, TableEdition ed) {
  require_minor_params(f, m, n, o);
  Graph g = table_graph(f, m, n, o);
  auto vars = var_indices(g);
  int nvars = g.order();
  std::array<int, 3> sizes{m, n, o};
  std::set<Polynomial, PolyLess> out;
  for (const auto& row : parse_rows(minor_table_source(f, ed))) {
    if (!eval_guard(row.guard, m, n, o)) continue;
    for (const auto& pat : row.patterns)
      for (const auto& p : instantiate_pattern(pat, sizes, vars, nvars))
        out.insert(p.abs_normalized());
  }
  return {out.begin(), out.end()};
}

int presentation_case(TableFamily f, int m, int n, int o) {
  if (f == TableFamily::Kmno) {
    if (o < 0 || n < o || m < n)
      throw hypothesis_error("presentation expects m >= n >= o >= 0, got " + triple_str(m, n, o));
  } else {
    if (o < 0 || n < 0 || m < o)
      throw hypothesis_error("presentation expects m >= o >= 0, got " + triple_str(m, n, o));
  }
  if (m + n + o < 4)
    throw hypothesis_error("presentation requires m + n + o >= 4, got " + triple_str(m, n, o));
  auto rows = parse_rows(presentation_source(f));
  int hit = -1;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (!eval_guard(rows[i].guard, m, n, o)) continue;
    if (hit >= 0) throw std::logic_error("presentation cases overlap at " + triple_str(m, n, o));
    hit = static_cast<int>(i);
  }
  if (hit < 0)
    throw hypothesis_error("no presentation case covers " + triple_str(m, n, o));
  return hit;
}

Ideal expected_I3(TableFamily f, int m, int n, int o) {
  int row_idx = presentation_case(f, m, n, o);
  TableRow row = parse_rows(presentation_source(f))[row_idx];
  Graph g = table_graph(f, m, n, o);
  auto vars = var_indices(g);
  int nvars = g.order();
  std::array<int, 3> sizes{m, n, o};
  std::vector<Polynomial> gens;
  for (const auto& text : row.patterns) {
    if (text.compare(0, 4, "all ") == 0) {
      size_t colon = text.find(':', 4);
      if (colon == std::string::npos)
        throw std::invalid_argument("quantified generator without ':': " + text);
      std::string head = trim(text.substr(4, colon - 4));
      if (head.size() != 1 || (head[0] != 'x' && head[0] != 'y' && head[0] != 'z'))
        throw std::invalid_argument("quantifier block must be x, y or z: " + text);
      int block = block_of(head[0]);
      std::vector<Piece> pieces = split_pattern(trim(text.substr(colon + 1)));
      for (const auto& p : pieces)
        if (p.block >= 0 && (p.block != block || p.slot != 0))
          throw std::invalid_argument("quantified generator must use only " + head + "_#: " + text);
      for (int idx = 1; idx <= sizes[block]; ++idx) {
        std::array<std::map<int, int>, 3> assign;
        assign[block][0] = idx;
        gens.push_back(parse_polynomial(render(pieces, assign), vars, nvars));
      }
    } else {
      for (const auto& p : instantiate_pattern(text, sizes, vars, nvars)) gens.push_back(p);
    }
  }
  return Ideal(std::move(gens), nvars);
}

std::string MinorTableDiff::str(const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << "missing " << missing.size() << ", surplus " << surplus.size();
  const char* sep = ": ";
  for (const auto& p : missing) {
    os << sep << "-[" << p.str(names) << "]";
    sep = " ";
  }
  for (const auto& p : surplus) {
    os << sep << "+[" << p.str(names) << "]";
    sep = " ";
  }
  return os.str();
}

MinorTableDiff minor_table_diff(TableFamily f, int m, int n, int o, TableEdition ed) {
  std::vector<Polynomial> expect = expected_3minors(f, m, n, o, ed);
  Graph g = table_graph(f, m, n, o);
  // a 2x2 matrix has no 3-minors, so K_{1,1} compares against the empty set
  MinorSet ms = g.order() < 3 ? MinorSet{3, {}, {}, false} : k_minors(g, 3);
  MinorTableDiff d;
  std::set_difference(expect.begin(), expect.end(), ms.minors.begin(), ms.minors.end(),
                      std::back_inserter(d.missing), PolyLess{});
  std::set_difference(ms.minors.begin(), ms.minors.end(), expect.begin(), expect.end(),
                      std::back_inserter(d.surplus), PolyLess{});
  return d;
}

bool verify_minor_table(TableFamily f, int m, int n, int o, TableEdition ed) {
  return minor_table_diff(f, m, n, o, ed).ok();
}

bool verify_I3(TableFamily f, int m, int n, int o) {
  Graph g = table_graph(f, m, n, o);
  return equal(critical_ideal(g, 3), expected_I3(f, m, n, o));
}

}  // namespace critid
