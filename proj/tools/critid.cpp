#include <bit>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "critid/classify.hpp"
#include "critid/critical.hpp"
#include "critid/graph.hpp"
#include "critid/ideal.hpp"
#include "critid/snf.hpp"
#include "critid/verify.hpp"

using namespace critid;
using ordered_json = nlohmann::ordered_json;

namespace {

struct GraphInput {
  std::string graph6;
  std::string edges_file;
  std::string family;
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("graph6", in.graph6, "graph6 string");
  cmd->add_option("--edges", in.edges_file,
                  "edge list file: first line is the vertex count, then one 'u v' per line");
  cmd->add_option(
      "--family", in.family,
      "constructed graph: complete:N, trivial:N, path:N, star:N, matching:N,K, "
      "multipartite:P1,P2[,..], tjoin:N,M,O (T_N joined to K_M + K_O), hidden-unit; "
      "'+' takes disjoint unions, e.g. complete:4+trivial:5");
}

std::vector<int> parse_params(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad parameter '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

Graph family_term(const std::string& term) {
  size_t colon = term.find(':');
  std::string name = term.substr(0, colon);
  std::vector<int> ps;
  if (colon != std::string::npos) ps = parse_params(term.substr(colon + 1));
  auto want = [&](size_t k) {
    if (ps.size() != k)
      throw std::invalid_argument("family " + name + " expects " + std::to_string(k) +
                                  " parameter(s)");
  };
  if (name == "complete") { want(1); return complete(ps[0]); }
  if (name == "trivial") { want(1); return trivial(ps[0]); }
  if (name == "path") { want(1); return path(ps[0]); }
  if (name == "star") { want(1); return star(ps[0]); }
  if (name == "matching") { want(2); return matching_removed(ps[0], ps[1]); }
  if (name == "multipartite") {
    if (ps.empty()) throw std::invalid_argument("multipartite needs part sizes");
    return complete_multipartite(ps);
  }
  if (name == "tjoin") { want(3); return t_join_cliques(ps[0], ps[1], ps[2]); }
  if (name == "hidden-unit") { want(0); return hidden_unit_graph(); }
  throw std::invalid_argument("unknown family '" + name + "'");
}

Graph load_graph(const GraphInput& in) {
  int sources = !in.graph6.empty() + !in.edges_file.empty() + !in.family.empty();
  if (sources != 1)
    throw std::invalid_argument("give exactly one of: graph6, --edges, --family");
  if (!in.graph6.empty()) return parse_graph6(in.graph6);
  if (!in.edges_file.empty()) {
    std::ifstream f(in.edges_file);
    if (!f) throw std::invalid_argument("cannot open " + in.edges_file);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_edge_list(ss.str());
  }
  std::optional<Graph> acc;
  std::stringstream ss(in.family);
  std::string term;
  while (std::getline(ss, term, '+')) {
    Graph g = family_term(term);
    acc = acc ? disjoint_union(*acc, g) : g;
  }
  if (!acc) throw std::invalid_argument("empty family expression");
  return *acc;
}

bool text_mode = false;

void emit(const ordered_json& j) { std::printf("%s\n", j.dump(1).c_str()); }

std::string graph_id(const Graph& g) {
  return g.is_simple() ? emit_graph6(g) : "(multigraph)";
}

std::string mask_str(std::uint16_t mask) {
  std::string out = "{";
  bool first = true;
  for (int v = 0; v < 16; ++v)
    if (mask & (1u << v)) {
      if (!first) out += ",";
      out += std::to_string(v + 1);
      first = false;
    }
  return out + "}";
}

// Two k-minors whose sum or difference is a unit certify a trivial ideal
// even when no single minor is one.
std::optional<std::string> combination_certificate(LaplacianMinors& lm, int k) {
  int n = lm.matrix().rows;
  std::vector<std::uint16_t> subsets;
  for (std::uint16_t mask = 0; mask < (1u << n); ++mask)
    if (std::popcount(mask) == k) subsets.push_back(mask);
  std::map<Polynomial, std::pair<std::uint16_t, std::uint16_t>, PolyLess> seen;
  for (std::uint16_t r : subsets)
    for (std::uint16_t c : subsets) {
      if (r > c) continue;
      Polynomial d = lm.minor_det(r, c);
      if (!d.is_zero()) seen.emplace(d, std::make_pair(r, c));
    }
  std::vector<std::pair<Polynomial, std::pair<std::uint16_t, std::uint16_t>>> entries(
      seen.begin(), seen.end());
  for (size_t i = 0; i < entries.size(); ++i)
    for (size_t j = i + 1; j < entries.size(); ++j) {
      Polynomial sum = entries[i].first + entries[j].first;
      Polynomial diff = entries[i].first - entries[j].first;
      const char* op = nullptr;
      Polynomial val = sum;
      if (sum.is_unit_constant()) {
        op = " + ";
      } else if (diff.is_unit_constant()) {
        op = " - ";
        val = diff;
      }
      if (op) {
        auto [r1, c1] = entries[i].second;
        auto [r2, c2] = entries[j].second;
        return "det L[" + mask_str(r1) + ";" + mask_str(c1) + "]" + op + "det L[" +
               mask_str(r2) + ";" + mask_str(c2) + "] = " + val.str();
      }
    }
  return std::nullopt;
}

ordered_json step_json(const CorankStep& st, const Graph& g, LaplacianMinors& lm) {
  ordered_json j;
  j["k"] = st.k;
  j["trivial"] = st.trivial;
  const char* method = "";
  switch (st.method) {
    case DecisionMethod::convention: method = "convention"; break;
    case DecisionMethod::unit_minor: method = "unit_minor"; break;
    case DecisionMethod::constant_gcd: method = "constant_gcd"; break;
    case DecisionMethod::single_generator: method = "single_generator"; break;
    case DecisionMethod::modp_witness: method = "modp_witness"; break;
    case DecisionMethod::groebner_basis: method = "groebner_basis"; break;
  }
  j["method"] = method;
  if (st.unit_minor) {
    j["witness"] = "det L[" + mask_str(st.unit_minor->first) + ";" +
                   mask_str(st.unit_minor->second) + "] = " +
                   lm.minor_det(st.unit_minor->first, st.unit_minor->second).str(
                       g.variable_names());
  } else if (st.trivial && st.method == DecisionMethod::groebner_basis) {
    if (auto cert = combination_certificate(lm, st.k)) j["witness"] = *cert;
  } else if (!st.trivial && st.witness_modulus) {
    std::string pt = "(";
    for (size_t i = 0; i < st.witness_point.size(); ++i)
      pt += (i ? "," : "") + std::to_string(st.witness_point[i]);
    j["witness"] = "all generators vanish at x = " + pt + ") mod " +
                   std::to_string(st.witness_modulus);
  }
  return j;
}

int cmd_gamma(const GraphInput& in) {
  Graph g = load_graph(in);
  if (g.order() > 8)
    throw std::invalid_argument("gamma needs at most 8 vertices, got " +
                                std::to_string(g.order()));
  CorankResult r = algebraic_corank(g, true);
  LaplacianMinors lm(g);
  ordered_json j;
  j["graph6"] = graph_id(g);
  j["n"] = g.order();
  j["gamma"] = r.gamma;
  j["ideals"] = ordered_json::array();
  for (const auto& st : r.steps) j["ideals"].push_back(step_json(st, g, lm));
  // the first non-trivial ideal, rendered when small, shows where gamma stops
  if (r.gamma < g.order()) {
    Ideal stop = critical_ideal(g, r.gamma + 1);
    if (stop.generators().size() <= 12) {
      ordered_json gens = ordered_json::array();
      for (const auto& p : stop.generators()) gens.push_back(p.str(g.variable_names()));
      j["first_nontrivial_ideal"] = gens;
    } else {
      j["first_nontrivial_ideal"] =
          std::to_string(stop.generators().size()) + " generators";
    }
  }
  if (text_mode) {
    std::printf("graph %s on %d vertices: gamma = %d\n", j["graph6"].get<std::string>().c_str(),
                g.order(), r.gamma);
    for (const auto& st : j["ideals"]) {
      std::printf("  I_%d %s via %s%s\n", st["k"].get<int>(),
                  st["trivial"].get<bool>() ? "= <1>" : "proper",
                  st["method"].get<std::string>().c_str(),
                  st.contains("witness")
                      ? ("; " + st["witness"].get<std::string>()).c_str()
                      : "");
    }
  } else {
    emit(j);
  }
  return 0;
}

int cmd_ideal(const GraphInput& in, int k, bool with_gb) {
  Graph g = load_graph(in);
  if (g.order() > 12)
    throw std::invalid_argument("ideal needs at most 12 vertices, got " +
                                std::to_string(g.order()));
  Ideal ideal = critical_ideal(g, k);
  ordered_json j;
  j["graph6"] = graph_id(g);
  j["k"] = k;
  j["trivial"] = is_trivial(ideal);
  ordered_json gens = ordered_json::array();
  for (const auto& p : ideal.generators()) gens.push_back(p.str(g.variable_names()));
  j["generators"] = gens;
  if (with_gb) {
    GroebnerBasis gb = groebner(ideal);
    ordered_json basis = ordered_json::array();
    for (const auto& p : gb.elements()) basis.push_back(p.str(g.variable_names()));
    j["groebner"] = basis;
  }
  if (text_mode) {
    std::printf("I_%d(%s): %s, %zu generators\n", k, j["graph6"].get<std::string>().c_str(),
                j["trivial"].get<bool>() ? "trivial" : "non-trivial",
                ideal.generators().size());
    for (const auto& s : j["generators"]) std::printf("  %s\n", s.get<std::string>().c_str());
    if (with_gb) {
      std::printf("groebner basis:\n");
      for (const auto& s : j["groebner"]) std::printf("  %s\n", s.get<std::string>().c_str());
    }
  } else {
    emit(j);
  }
  return 0;
}

int cmd_group(const GraphInput& in) {
  Graph g = load_graph(in);
  if (!is_connected(g)) throw std::invalid_argument("group needs a connected graph");
  CriticalGroup cg = critical_group(g);
  mpz_class trees = 1;
  for (const auto& f : cg.factors) trees *= f;
  ordered_json j;
  j["graph6"] = graph_id(g);
  j["n"] = g.order();
  ordered_json fs = ordered_json::array();
  for (const auto& f : cg.factors) fs.push_back(f.get_str());
  j["invariant_factors"] = fs;
  j["group"] = cg.str();
  j["f1"] = f_count(g, 1);
  j["spanning_trees"] = trees.get_str();
  if (text_mode)
    std::printf("%s: K = %s, f1 = %d, %s spanning trees\n",
                j["graph6"].get<std::string>().c_str(), cg.str().c_str(),
                j["f1"].get<int>(), trees.get_str().c_str());
  else
    emit(j);
  return 0;
}

int cmd_classify(const GraphInput& in) {
  Graph g = load_graph(in);
  if (!g.is_simple()) throw std::invalid_argument("classify needs a simple graph");
  ordered_json j;
  j["graph6"] = emit_graph6(g);
  j["n"] = g.order();
  bool connected = is_connected(g);
  j["connected"] = connected;
  if (g.order() <= 8) j["gamma"] = corank(g);
  if (connected) {
    j["gamma_le1"] = in_gamma_le1(g);
    FamilyMembership fm = in_gamma_le2_structural(g);
    j["gamma_le2"] = fm.family != Family::none;
    j["family"] = fm.family == Family::none ? "none" : fm.str();
    ordered_json params = ordered_json::array();
    if (fm.family != Family::none) {
      params.push_back(fm.m);
      params.push_back(fm.n);
      params.push_back(fm.o);
    }
    j["parameters"] = params;
    ordered_json all = ordered_json::array();
    for (const auto& p : family_parameterizations(g)) all.push_back(p.str());
    j["parameterizations"] = all;
    auto hit = f2_hit(g);
    j["forbidden_pattern"] = hit ? ordered_json(*hit) : ordered_json(nullptr);
    ordered_json fs = ordered_json::array();
    for (const auto& f : critical_group(g).factors) fs.push_back(f.get_str());
    j["invariant_factors"] = fs;
    j["f1"] = f_count(g, 1);
    j["g1"] = in_g1(g);
    G2Verdict v = in_g2(g);
    ordered_json g2;
    g2["member"] = v.member;
    if (v.member) {
      g2["clause"] = v.clause_text;
      g2["evidence"] = v.evidence;
    }
    j["g2"] = g2;
  } else {
    // disjoint unions: gamma adds over components, so the memberships reduce
    // to component shape
    auto comps = connected_components(g);
    int big = 0;
    bool all_complete = true;
    for (const auto& comp : comps) {
      if (comp.size() >= 2) ++big;
      if (!is_complete(induced(g, comp))) all_complete = false;
    }
    j["gamma_le1"] = all_complete && big <= 1;
    j["gamma_le2"] = in_gamma_le2_any(g);
    j["components"] = comps.size();
    auto hit = f2_hit(g);
    j["forbidden_pattern"] = hit ? ordered_json(*hit) : ordered_json(nullptr);
  }
  if (text_mode) {
    std::printf("%s\n", j.dump(1).c_str());
  } else {
    emit(j);
  }
  return 0;
}

int cmd_forb_search(int k, int n_max) {
  std::vector<Graph> out = forb_search(k, n_max);
  ordered_json j;
  j["k"] = k;
  j["n_max"] = n_max;
  j["count"] = out.size();
  ordered_json arr = ordered_json::array();
  for (const auto& g : out) {
    ordered_json e;
    e["graph6"] = emit_graph6(g);
    e["n"] = g.order();
    ordered_json name(nullptr);
    for (const auto& [nm, pat] : f2_patterns().patterns)
      if (g.order() == pat.order() && canonical_code(g) == canonical_code(pat)) name = nm;
    if (g.order() == 3 && canonical_code(g) == canonical_code(path(3))) name = "P3";
    if (g.order() == 2 && canonical_code(g) == canonical_code(path(2))) name = "P2";
    e["name"] = name;
    arr.push_back(e);
  }
  j["graphs"] = arr;
  if (text_mode) {
    std::printf("forb(%d, %d): %zu graphs\n", k, n_max, out.size());
    for (const auto& e : arr)
      std::printf("  %s%s\n", e["graph6"].get<std::string>().c_str(),
                  e["name"].is_null() ? "" : ("  (" + e["name"].get<std::string>() + ")").c_str());
  } else {
    emit(j);
  }
  return 0;
}

int cmd_verify(int n_max, int sweep, int jobs, const std::vector<std::string>& only) {
  std::vector<SuiteResult> suites;
  if (only.empty()) {
    suites = verify_all(n_max, sweep, jobs);
  } else {
    for (const auto& id : only) {
      if (id == "V1") suites.push_back(run_v1(n_max, jobs));
      else if (id == "V2") suites.push_back(run_v2());
      else if (id == "V3") suites.push_back(run_v3());
      else if (id == "V4") suites.push_back(run_v4(n_max, jobs));
      else if (id == "V5") suites.push_back(run_v5(4, jobs));
      else if (id == "V6") suites.push_back(run_v6(4, jobs));
      else if (id == "V7") suites.push_back(run_v7());
      else if (id == "V8") suites.push_back(run_v8());
      else if (id == "V9") suites.push_back(run_v9(sweep));
      else if (id == "P1") suites.push_back(run_p1(jobs));
      else throw std::invalid_argument("unknown suite '" + id + "' (V1..V9, P1)");
    }
  }
  if (text_mode)
    std::printf("%s", report_text(suites).c_str());
  else
    std::printf("%s\n", report_json(suites).c_str());
  for (const auto& s : suites)
    if (!s.pass()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact critical ideals, critical groups and the gamma classification of graphs"};
  app.require_subcommand(1);
  app.fallthrough();  // lets the global --text appear after a subcommand
  app.add_flag("--text", text_mode, "human-readable output instead of JSON");

  GraphInput gamma_in, ideal_in, group_in, classify_in;
  int ideal_k = 1;
  bool ideal_gb = false;
  int forb_k = 2, forb_n = 6;
  int v_nmax = 7, v_sweep = 9, v_jobs = 1;
  std::vector<std::string> v_only;

  CLI::App* c_gamma = app.add_subcommand("gamma", "number of trivial critical ideals, per-index report");
  add_graph_options(c_gamma, gamma_in);

  CLI::App* c_ideal = app.add_subcommand("ideal", "generators of one critical ideal");
  add_graph_options(c_ideal, ideal_in);
  c_ideal->add_option("-k,--k", ideal_k, "ideal index")->required();
  c_ideal->add_flag("--groebner", ideal_gb, "also print a strong groebner basis");

  CLI::App* c_group = app.add_subcommand("group", "critical group of a connected graph");
  add_graph_options(c_group, group_in);

  CLI::App* c_classify = app.add_subcommand("classify", "gamma <= 2 and two-unit-factor classification");
  add_graph_options(c_classify, classify_in);

  CLI::App* c_forb = app.add_subcommand("forb-search", "minimal graphs outside gamma <= k");
  c_forb->add_option("-k,--k", forb_k, "gamma bound")->required();
  c_forb->add_option("-n,--n-max", forb_n, "largest vertex count")->required();

  CLI::App* c_verify = app.add_subcommand("verify", "run the verification suites");
  c_verify->add_option("--nmax", v_nmax, "largest vertex count for the graph sweeps");
  c_verify->add_option("--sweep", v_sweep, "largest m+n+o for the parameter sweeps");
  c_verify->add_option("--jobs", v_jobs, "worker threads");
  c_verify->add_option("--suite", v_only, "run selected suites only (V1..V9, P1)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_gamma) return cmd_gamma(gamma_in);
    if (*c_ideal) return cmd_ideal(ideal_in, ideal_k, ideal_gb);
    if (*c_group) return cmd_group(group_in);
    if (*c_classify) return cmd_classify(classify_in);
    if (*c_forb) return cmd_forb_search(forb_k, forb_n);
    if (*c_verify) return cmd_verify(v_nmax, v_sweep, v_jobs, v_only);
  } catch (const std::exception& e) {
    ordered_json err;
    err["error"] = e.what();
    std::fprintf(stderr, "%s\n", err.dump(1).c_str());
    return 2;
  }
  return 2;
}
