#include "critid/graph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace critid {

Graph::Graph(int n) : n_(n), mult_(n, std::vector<int>(n, 0)), labels_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

int Graph::multiplicity(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex index");
  return mult_[u][v];
}

void Graph::set_multiplicity(int u, int v, int m) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex index");
  if (u == v) throw std::invalid_argument("loops not supported");
  if (m < 0) throw std::invalid_argument("negative edge multiplicity");
  mult_[u][v] = mult_[v][u] = m;
}

void Graph::add_edge(int u, int v, int m) { set_multiplicity(u, v, multiplicity(u, v) + m); }

int Graph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u) d += multiplicity(v, u);
  return d;
}

int Graph::edge_count() const {
  int e = 0;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) e += mult_[u][v];
  return e;
}

bool Graph::is_simple() const {
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (mult_[u][v] > 1) return false;
  return true;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

std::vector<std::string> Graph::variable_names() const {
  std::vector<std::string> names(n_);
  for (int v = 0; v < n_; ++v) names[v] = labels_[v].empty() ? "x" + std::to_string(v + 1) : labels_[v];
  return names;
}

// --- constructions ---------------------------------------------------------

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph trivial(int n) { return Graph(n); }

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star(int n) {
  Graph g(n + 1);
  for (int v = 0; v < n; ++v) g.add_edge(v, n);
  return g;
}

Graph matching_removed(int n, int k) {
  if (2 * k > n) throw std::invalid_argument("matching larger than vertex count");
  Graph g = complete(n);
  for (int i = 0; i < k; ++i) g.set_multiplicity(2 * i, 2 * i + 1, 0);
  return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
  static const char* letters[] = {"x", "y", "z", "u", "v", "w"};
  int n = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("negative part size");
    n += p;
  }
  Graph g(n);
  int base = 0;
  std::vector<int> block(n);
  for (size_t b = 0; b < parts.size(); ++b) {
    for (int i = 0; i < parts[b]; ++i) {
      block[base + i] = static_cast<int>(b);
      if (b < 6) g.set_label(base + i, std::string(letters[b]) + std::to_string(i + 1));
    }
    base += parts[b];
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (block[u] != block[v]) g.add_edge(u, v);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (int u = 0; u < a.order(); ++u) {
    for (int v = u + 1; v < a.order(); ++v) g.set_multiplicity(u, v, a.multiplicity(u, v));
    g.set_label(u, a.label(u));
  }
  int off = a.order();
  for (int u = 0; u < b.order(); ++u) {
    for (int v = u + 1; v < b.order(); ++v)
      g.set_multiplicity(off + u, off + v, b.multiplicity(u, v));
    g.set_label(off + u, b.label(u));
  }
  return g;
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) g.set_multiplicity(u, a.order() + v, 1);
  return g;
}

Graph cone(const Graph& g) { return join(g, complete(1)); }

Graph t_join_cliques(int n, int m, int o) {
  if (n < 0 || m < 0 || o < 0) throw std::invalid_argument("negative block size");
  Graph g(m + n + o);
  for (int i = 0; i < m; ++i) g.set_label(i, "x" + std::to_string(i + 1));
  for (int j = 0; j < n; ++j) g.set_label(m + j, "y" + std::to_string(j + 1));
  for (int k = 0; k < o; ++k) g.set_label(m + n + k, "z" + std::to_string(k + 1));
  for (int i = 0; i < m; ++i)
    for (int i2 = i + 1; i2 < m; ++i2) g.add_edge(i, i2);
  for (int k = 0; k < o; ++k)
    for (int k2 = k + 1; k2 < o; ++k2) g.add_edge(m + n + k, m + n + k2);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) g.add_edge(m + j, i);
    for (int k = 0; k < o; ++k) g.add_edge(m + j, m + n + k);
  }
  return g;
}

Graph hidden_unit_graph() {
  Graph g(7);
  for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {0, 5}, {0, 6}, {1, 2}, {1, 6}, {2, 3}, {2, 5},
                      {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}})
    g.add_edge(u, v);
  return g;
}

// --- graph6 ----------------------------------------------------------------

// Bytes are printable 63..126. First byte encodes n+63 (n <= 62 here); the
// upper triangle follows column by column ((0,1),(0,2),(1,2),(0,3),...),
// packed 6 bits per byte, high bit first, zero-padded.
Graph parse_graph6(const std::string& s) {
  if (s.empty()) throw parse_error("empty graph6 input", 0);
  unsigned char c0 = static_cast<unsigned char>(s[0]);
  if (c0 == 126) throw parse_error("multi-byte vertex counts unsupported", 0);
  if (c0 < 63 || c0 > 125) throw parse_error("invalid graph6 header byte", 0);
  int n = c0 - 63;
  size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
  size_t nbytes = (nbits + 5) / 6;
  if (s.size() < 1 + nbytes) throw parse_error("graph6 input truncated", s.size());
  if (s.size() > 1 + nbytes) throw parse_error("trailing bytes after graph6 data", 1 + nbytes);
  Graph g(n);
  size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      size_t byte_idx = 1 + bit / 6;
      unsigned char c = static_cast<unsigned char>(s[byte_idx]);
      if (c < 63 || c > 126) throw parse_error("invalid graph6 data byte", byte_idx);
      unsigned v = c - 63;
      if ((v >> (5 - bit % 6)) & 1u) g.add_edge(i, j);
      ++bit;
    }
  }
  // padding bits must be zero
  for (; bit < nbytes * 6; ++bit) {
    size_t byte_idx = 1 + bit / 6;
    unsigned char c = static_cast<unsigned char>(s[byte_idx]);
    if (c < 63 || c > 126) throw parse_error("invalid graph6 data byte", byte_idx);
    if (((c - 63) >> (5 - bit % 6)) & 1u) throw parse_error("nonzero graph6 padding", byte_idx);
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  if (!g.is_simple()) throw std::invalid_argument("graph6 requires a simple graph");
  int n = g.order();
  if (n > 62) throw std::invalid_argument("graph6 emitter limited to 62 vertices");
  std::string out(1, static_cast<char>(63 + n));
  unsigned acc = 0;
  int fill = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | unsigned(g.adjacent(i, j));
      if (++fill == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        fill = 0;
      }
    }
  }
  if (fill) out.push_back(static_cast<char>(63 + (acc << (6 - fill))));
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  int n;
  if (!(in >> n) || n < 0) throw std::invalid_argument("edge list: missing vertex count");
  Graph g(n);
  int u, v;
  while (in >> u) {
    if (!(in >> v)) throw std::invalid_argument("edge list: dangling endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge list: vertex out of range");
    g.add_edge(u, v);
  }
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << "\n";
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      for (int m = 0; m < g.multiplicity(u, v); ++m) os << u << " " << v << "\n";
  return os.str();
}

// --- operations ------------------------------------------------------------

Graph complement(const Graph& g) {
  if (!g.is_simple()) throw std::invalid_argument("complement of a multigraph");
  Graph c(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v)
      c.set_multiplicity(u, v, g.adjacent(u, v) ? 0 : 1);
    c.set_label(u, g.label(u));
  }
  return c;
}

Graph induced(const Graph& g, const std::vector<int>& verts) {
  Graph h(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i) {
    for (size_t j = i + 1; j < verts.size(); ++j)
      h.set_multiplicity(static_cast<int>(i), static_cast<int>(j),
                         g.multiplicity(verts[i], verts[j]));
    h.set_label(static_cast<int>(i), g.label(verts[i]));
  }
  return h;
}

Graph delete_vertex(const Graph& g, int v) {
  std::vector<int> keep;
  for (int u = 0; u < g.order(); ++u)
    if (u != v) keep.push_back(u);
  return induced(g, keep);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      out[id].push_back(u);
      for (int v = 0; v < g.order(); ++v)
        if (g.adjacent(u, v) && comp[v] == -1) {
          comp[v] = id;
          stack.push_back(v);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return connected_components(g).size() == 1;
}

bool is_complete(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) return false;
  return true;
}

bool is_trivial_graph(const Graph& g) { return g.edge_count() == 0; }

namespace {

bool extend_embedding(const Graph& g, const Graph& p, std::vector<int>& image,
                      std::vector<bool>& used) {
  size_t k = image.size();
  if (k == static_cast<size_t>(p.order())) return true;
  for (int u = 0; u < g.order(); ++u) {
    if (used[u]) continue;
    if (g.degree(u) < p.degree(static_cast<int>(k))) continue;
    bool ok = true;
    for (size_t i = 0; i < k && ok; ++i)
      ok = g.adjacent(image[i], u) == p.adjacent(static_cast<int>(i), static_cast<int>(k));
    if (!ok) continue;
    image.push_back(u);
    used[u] = true;
    if (extend_embedding(g, p, image, used)) return true;
    image.pop_back();
    used[u] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& pattern) {
  if (!g.is_simple() || !pattern.is_simple())
    throw std::invalid_argument("induced-subgraph search needs simple graphs");
  if (pattern.order() > g.order()) return std::nullopt;
  std::vector<int> image;
  std::vector<bool> used(g.order(), false);
  if (extend_embedding(g, pattern, image, used)) return image;
  return std::nullopt;
}

bool contains_induced(const Graph& g, const Graph& pattern) {
  return find_induced(g, pattern).has_value();
}

const PatternSet& f2_patterns() {
  static const PatternSet ps = [] {
    PatternSet s;
    s.patterns.emplace_back("P4", path(4));

    Graph k5s2 = complete(5);  // K5 minus the 2-star {1,2},{1,5}
    k5s2.set_multiplicity(0, 1, 0);
    k5s2.set_multiplicity(0, 4, 0);
    s.patterns.emplace_back("K5-S2", k5s2);

    s.patterns.emplace_back("K6-M2", [] {  // K6 minus the matching {1,2},{3,6}
      Graph g = complete(6);
      g.set_multiplicity(0, 1, 0);
      g.set_multiplicity(2, 5, 0);
      return g;
    }());

    Graph gaa(5);
    for (auto [u, v] : {std::pair{1, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 4}}) gaa.add_edge(u, v);
    s.patterns.emplace_back("Gaa", gaa);

    Graph gab(5);
    for (auto [u, v] : {std::pair{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}}) gab.add_edge(u, v);
    s.patterns.emplace_back("Gab", gab);
    return s;
  }();
  return ps;
}

std::optional<std::string> f2_hit(const Graph& g) {
  for (const auto& [name, pattern] : f2_patterns().patterns)
    if (contains_induced(g, pattern)) return name;
  return std::nullopt;
}

// --- canonical form --------------------------------------------------------

std::uint64_t canonical_code(const Graph& g) {
  if (!g.is_simple()) throw std::invalid_argument("canonical form needs a simple graph");
  int n = g.order();
  if (n > 8) throw std::invalid_argument("canonical form limited to 8 vertices");
  if (n == 0) return 0;
  std::vector<std::uint8_t> adj(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.adjacent(u, v)) adj[u] |= std::uint8_t(1u << v);

  // order candidates must respect degree classes (an isomorphism-closed
  // restriction), so the minimum code over them is isomorphism-invariant
  std::vector<int> perm(n);
  for (int v = 0; v < n; ++v) perm[v] = v;
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<std::pair<int, int>> classes;  // [begin, end) runs of equal degree
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && g.degree(perm[j]) == g.degree(perm[i])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }

  std::uint64_t best = ~0ull;
  for (;;) {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        code = (code << 1) | ((adj[perm[i]] >> perm[j]) & 1u);
    best = std::min(best, code);
    // odometer over per-class permutations
    size_t k = classes.size();
    while (k-- > 0) {
      if (std::next_permutation(perm.begin() + classes[k].first, perm.begin() + classes[k].second))
        break;
      // wrapped to sorted state; carry to the previous class
      if (k == 0) return (std::uint64_t(n) << 32) | best;
    }
  }
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_code(a) == canonical_code(b);
}

// --- enumeration -----------------------------------------------------------

namespace {

std::mutex enum_mu;
std::map<int, std::shared_ptr<const std::vector<Graph>>> enum_cache;

std::shared_ptr<const std::vector<Graph>> connected_classes(int n) {
  {
    std::lock_guard<std::mutex> lock(enum_mu);
    auto it = enum_cache.find(n);
    if (it != enum_cache.end()) return it->second;
  }
  std::vector<Graph> out;
  if (n == 1) {
    out.push_back(trivial(1));
  } else {
    auto prev = connected_classes(n - 1);
    // every connected graph arises by attaching a vertex to a connected
    // graph on n-1 vertices (delete a non-cut vertex, e.g. a spanning tree leaf)
    std::set<std::uint64_t> seen;
    for (const Graph& h : *prev) {
      for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
        Graph g(n);
        for (int u = 0; u < n - 1; ++u)
          for (int v = u + 1; v < n - 1; ++v) g.set_multiplicity(u, v, h.multiplicity(u, v));
        for (int u = 0; u < n - 1; ++u)
          if (mask & (1u << u)) g.add_edge(u, n - 1);
        if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
      }
    }
  }
  auto sp = std::make_shared<const std::vector<Graph>>(std::move(out));
  std::lock_guard<std::mutex> lock(enum_mu);
  auto [it, inserted] = enum_cache.emplace(n, sp);
  return it->second;
}

}  // namespace

GraphClassIterator::GraphClassIterator(int n) : n_(n) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumeration supports 1..8 vertices");
  list_ = connected_classes(n);
}

GraphClassIterator enumerate_connected(int n) { return GraphClassIterator(n); }

}  // namespace critid
