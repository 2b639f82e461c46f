#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace critid {

// Finite undirected multigraph without loops. Vertices are 0-based; an
// optional label per vertex feeds polynomial rendering (defaults to x{i+1}).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  int multiplicity(int u, int v) const;
  bool adjacent(int u, int v) const { return multiplicity(u, v) > 0; }
  void set_multiplicity(int u, int v, int m);
  void add_edge(int u, int v, int m = 1);

  int degree(int v) const;  // multiplicities counted
  int edge_count() const;   // multiplicities counted
  bool is_simple() const;
  std::vector<int> degree_sequence() const;  // sorted descending

  const std::string& label(int v) const { return labels_[v]; }
  void set_label(int v, std::string s) { labels_[v] = std::move(s); }
  std::vector<std::string> variable_names() const;  // label or x{i+1}

  bool operator==(const Graph& o) const { return n_ == o.n_ && mult_ == o.mult_; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> mult_;
  std::vector<std::string> labels_;
};

// --- constructions ---------------------------------------------------------

Graph complete(int n);
Graph trivial(int n);
Graph path(int n);
// Star with n leaves (n+1 vertices, center last).
Graph star(int n);
// K_n minus a k-edge matching on vertices (0,1),(2,3),...,(2k-2,2k-1). Pre: 2k <= n.
Graph matching_removed(int n, int k);
// Complete multipartite; parts in order, block labels x,y,z,u,v,w + index.
Graph complete_multipartite(const std::vector<int>& parts);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
// Apex vertex joined to all of g; apex is the last vertex.
Graph cone(const Graph& g);
// T_n joined to K_m + K_o. Vertex layout [K_m | T_n | K_o], labels x/y/z.
Graph t_join_cliques(int n, int m, int o);
// Seven-vertex graph whose fifth critical ideal is trivial although no single
// 5 x 5 submatrix of its generalized Laplacian has determinant +-1.
Graph hidden_unit_graph();

// --- encoding --------------------------------------------------------------

struct parse_error : std::runtime_error {
  size_t offset;
  parse_error(const std::string& what, size_t off)
      : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// graph6 codec for simple graphs on at most 62 vertices.
Graph parse_graph6(const std::string& s);
std::string emit_graph6(const Graph& g);

// Plain text: first line vertex count, then one "u v" edge per line (0-based).
// Repeated pairs accumulate multiplicity.
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

// --- operations ------------------------------------------------------------

Graph complement(const Graph& g);  // pre: simple
Graph induced(const Graph& g, const std::vector<int>& verts);
Graph delete_vertex(const Graph& g, int v);
bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_complete(const Graph& g);
bool is_trivial_graph(const Graph& g);  // no edges

// Induced-subgraph search (simple graphs). find_induced returns the image of
// pattern's vertices in g, in pattern order, if an induced embedding exists.
std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& pattern);
bool contains_induced(const Graph& g, const Graph& pattern);

// The five minimal forbidden graphs for algebraic co-rank <= 2.
struct PatternSet {
  std::vector<std::pair<std::string, Graph>> patterns;  // name, graph
};
const PatternSet& f2_patterns();
// Name of the first forbidden pattern appearing as induced subgraph, if any.
std::optional<std::string> f2_hit(const Graph& g);

// Canonical form for simple graphs on <= 8 vertices: minimum upper-triangle
// adjacency code over all degree-class-respecting vertex orders.
std::uint64_t canonical_code(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

// --- enumeration -----------------------------------------------------------

// One representative per isomorphism class of connected simple graphs on n
// vertices, deterministic order, cached per n. Pre: 1 <= n <= 8.
class GraphClassIterator {
 public:
  explicit GraphClassIterator(int n);
  int order() const { return n_; }
  size_t size() const { return list_->size(); }
  std::vector<Graph>::const_iterator begin() const { return list_->begin(); }
  std::vector<Graph>::const_iterator end() const { return list_->end(); }
  const std::vector<Graph>& all() const { return *list_; }

 private:
  int n_;
  std::shared_ptr<const std::vector<Graph>> list_;
};

GraphClassIterator enumerate_connected(int n);

}  // namespace critid
