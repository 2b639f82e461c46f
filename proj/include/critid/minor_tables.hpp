#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "critid/critical.hpp"
#include "critid/graph.hpp"
#include "critid/ideal.hpp"

namespace critid {

// Parameterized families with tabulated 3-minors: K_{m,n}, K_{m,n,o},
// K_m v T_n, and T_n v (K_m + K_o). Parameters are always (m, n, o); the
// two-block families ignore o. X is the first block (a clique in the join
// families), Y the independent block, Z the second clique.
enum class TableFamily { Kmn, Kmno, KmJoinTn, TnJoinKmKo };

// Raised when (m, n, o) violates a table's hypotheses, e.g. no presentation
// case covers the triple.
struct hypothesis_error : std::invalid_argument {
  explicit hypothesis_error(const std::string& what) : std::invalid_argument(what) {}
};

// as_printed is the verbatim transcription. corrected applies three repairs
// the computation (and, for the tripartite table, the theorem's own proof)
// forces: the bare v+2 minors belong to the block whose two sibling blocks
// have size >= 2, and a sum u+v only occurs for nonadjacent u, v, so the
// join tables cannot list x+y or y+z. Kmn needs no repair.
enum class TableEdition { as_printed, corrected };

// Vertex-labeled instance: x block, then y block, then z block.
Graph table_graph(TableFamily f, int m, int n, int o = 0);

// Table rows in the declarative source format, one row per line:
//   guard : pattern ; pattern ; ...
// Guards are &/| combinations of comparisons on m, n, o ("true" when
// unconditional). Patterns are +-*() expressions over integers and the
// placeholders x_i1, x_i2, x_i3, y_j1, ..., z_k3; a row instantiates over
// every strictly increasing assignment of its placeholders within the block
// sizes. Presentation rows additionally use concrete variables (x_1, y_2)
// and whole-block generator families ("all x: x_# + 1").
const std::string& minor_table_source(TableFamily f,
                                      TableEdition ed = TableEdition::as_printed);
const std::string& presentation_source(TableFamily f);  // Kmno and TnJoinKmKo

// Every row instantiated over all index tuples, sign-normalized so leading
// coefficients are positive, deduplicated, ascending. Pre: block sizes >= 1
// for the family's blocks (>= 0 is allowed only where a guard can still
// fire, matching the table hypotheses m, n >= 1 resp. m, n, o >= 1).
std::vector<Polynomial> expected_3minors(TableFamily f, int m, int n, int o = 0,
                                         TableEdition ed = TableEdition::as_printed);

// 0-based row of the presentation case the triple satisfies. Exactly one
// case may fire: none raises hypothesis_error, several raise logic_error.
int presentation_case(TableFamily f, int m, int n, int o);
// The matching case's generators, fully instantiated over nvars = m + n + o.
Ideal expected_I3(TableFamily f, int m, int n, int o);

struct MinorTableDiff {
  std::vector<Polynomial> missing;  // listed in the table, not among the minors
  std::vector<Polynomial> surplus;  // computed minors the table does not list
  bool ok() const { return missing.empty() && surplus.empty(); }
  std::string str(const std::vector<std::string>& names = {}) const;
};

// Symmetric difference between k_minors(L, 3) and expected_3minors, both up
// to sign.
MinorTableDiff minor_table_diff(TableFamily f, int m, int n, int o = 0,
                                TableEdition ed = TableEdition::as_printed);
bool verify_minor_table(TableFamily f, int m, int n, int o = 0,
                        TableEdition ed = TableEdition::as_printed);

// Mutual containment of critical_ideal(G, 3) and expected_I3.
bool verify_I3(TableFamily f, int m, int n, int o);

}  // namespace critid
