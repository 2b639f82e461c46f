#pragma once

#include <string>
#include <vector>

#include "critid/graph.hpp"

namespace critid {

// The connected graphs whose first two critical ideals are trivial live
// inside two families: complete tripartite graphs K_{m,n,o} and joins
// T_n v (K_m + K_o). Both are closed under induced subgraphs, so a graph
// embeds into some family member exactly when it is itself an instance.
enum class Family { complete, tripartite, t_join, none };

struct FamilyMembership {
  Family family = Family::none;
  int m = 0, n = 0, o = 0;
  // blocks[v]: tripartite part index 0/1/2 in size order m >= n >= o, or for
  // t_join 0 = independent T_n block, 1 = K_m clique, 2 = K_o clique.
  std::vector<int> blocks;
  std::string str() const;  // "tripartite(2,2,0)", "t-join-cliques(n,m,o)"
};

// Every way to write g exactly as K_{m,n,o} (at most one, parts sorted) or as
// T_n v (K_m + K_o) with m >= o. Decided on the complement: a disjoint union
// of at most three cliques, or of one clique plus one complete bipartite
// graph. Throws on multigraphs.
std::vector<FamilyMembership> family_parameterizations(const Graph& g);

// Rebuilds the family graph on the witness blocks and compares it with g.
bool validate_membership(const Graph& g, const FamilyMembership& fm);

// Connected simple g has at most one trivial critical ideal iff complete.
bool in_gamma_le1(const Graph& g);

// Membership in the two host families, preferring the complete tag, then
// tripartite, then t_join. family == none means gamma(g) >= 3 for connected
// simple g.
FamilyMembership in_gamma_le2_structural(const Graph& g);

// Possibly disconnected: gamma(g) <= 2 iff after discarding isolated
// vertices g is empty, a single component inside the host families, or two
// complete graphs.
bool in_gamma_le2_any(const Graph& g);

// Exactly one invariant factor equal to 1 iff complete; false for n < 2.
bool in_g1(const Graph& g);

// One bullet of the clause lists characterizing the connected graphs whose
// critical group has exactly two invariant factors equal to 1.
struct G2Clause {
  const char* text;
  bool (*holds)(int m, int n, int o);
};
const std::vector<G2Clause>& g2_clauses(Family f);  // tripartite or t_join

struct G2Verdict {
  bool member = false;
  Family family = Family::none;  // family whose clause fired
  int m = 0, n = 0, o = 0;
  int clause = -1;  // index into g2_clauses(family)
  std::string clause_text;
  std::string evidence;  // parameter values plus gcd or parity facts
};

// Evaluates the clause lists over every parameterization of g; member iff
// some clause holds, recording the first hit. Pre: connected simple.
G2Verdict in_g2(const Graph& g);

}  // namespace critid
