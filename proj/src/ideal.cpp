#include "critid/ideal.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <tuple>

namespace critid {

GroebnerBudget default_budget() {
  static const GroebnerBudget b = [] {
    GroebnerBudget d;
    if (const char* env = std::getenv("CRITID_BUDGET")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end && *end == '\0' && v > 0) d.max_pairs = v;
    }
    return d;
  }();
  return b;
}

Ideal::Ideal(std::vector<Polynomial> gens, int nvars, MonomialOrder ord)
    : nvars_(nvars), order_(ord) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.nvars() != nvars || g.order() != ord)
      throw std::invalid_argument("generator ring mismatch");
    gens_.push_back(std::move(g));
  }
}

GroebnerBasis::GroebnerBasis(std::vector<Polynomial> elems, int nvars, MonomialOrder ord,
                             bool reduced)
    : elems_(std::move(elems)), nvars_(nvars), order_(ord), reduced_(reduced) {}

bool GroebnerBasis::contains_unit() const {
  for (const auto& e : elems_)
    if (e.is_unit_constant()) return true;
  return false;
}

namespace {

// Symmetric remainder: c = q*a + r with r in (-a/2, a/2]. Pre: a > 0.
void symmetric_div(const mpz_class& c, const mpz_class& a, mpz_class& q, mpz_class& r) {
  mpz_class num = 2 * c - a, den = 2 * a;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  r = c - q * a;
}

// Full normal form of p against basis (all leads positive), optionally
// skipping one index (used during interreduction).
Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& basis, int skip = -1) {
  Polynomial done = Polynomial::zero(p.nvars(), p.order());
  Polynomial cur = p;
  mpz_class q, r;
  while (!cur.is_zero()) {
    const Term& t = cur.leading();
    // choose the applicable reducer with the smallest leading coefficient
    int pick = -1;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (static_cast<int>(i) == skip) continue;
      const Term& lt = basis[i].leading();
      if (!mono_divides(lt.mono, t.mono)) continue;
      symmetric_div(t.coeff, lt.coeff, q, r);
      if (q == 0) continue;  // coefficient already in the residue window
      if (pick == -1 || lt.coeff < basis[pick].leading().coeff) pick = static_cast<int>(i);
    }
    if (pick == -1) {
      done = done + Polynomial::term(t.coeff, t.mono, p.order());
      cur = cur - Polynomial::term(t.coeff, t.mono, p.order());
      continue;
    }
    const Term& lt = basis[pick].leading();
    symmetric_div(t.coeff, lt.coeff, q, r);
    cur = cur - basis[pick].times_term(q, mono_div(t.mono, lt.mono));
  }
  return done;
}

// In-place interreduction to a fixpoint; returns true if a unit appears.
bool interreduce(std::vector<Polynomial>& basis) {
  for (auto& g : basis) g = g.abs_normalized();
  std::sort(basis.begin(), basis.end(), PolyLess{});
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      Polynomial r = reduce_full(basis[i], basis, static_cast<int>(i));
      if (r == basis[i]) continue;
      changed = true;
      if (r.is_unit_constant()) return true;
      if (r.is_zero()) {
        basis.erase(basis.begin() + i);
        --i;
      } else {
        basis[i] = r.abs_normalized();
      }
    }
  }
  std::sort(basis.begin(), basis.end(), PolyLess{});
  return false;
}

struct PairEntry {
  Monomial lcm;
  size_t i, j;
};

struct PairCmp {
  MonomialOrder ord;
  bool operator()(const PairEntry& a, const PairEntry& b) const {
    int c = mono_cmp(a.lcm, b.lcm, ord);
    if (c != 0) return c < 0;  // smallest lcm first
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

GroebnerBasis groebner(const Ideal& ideal, const GroebnerBudget& budget) {
  int nv = ideal.nvars();
  MonomialOrder ord = ideal.order();
  auto unit_basis = [&] {
    return GroebnerBasis({Polynomial::constant(1, nv, ord)}, nv, ord, true);
  };

  std::vector<Polynomial> basis = ideal.generators();
  if (interreduce(basis)) return unit_basis();
  if (basis.empty()) return GroebnerBasis({}, nv, ord, true);

  std::set<PairEntry, PairCmp> pairs{PairCmp{ord}};
  auto push_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i)
      pairs.insert({mono_lcm(basis[i].leading().mono, basis[j].leading().mono), i, j});
  };
  for (size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  long processed = 0;
  mpz_class d, s, t;
  while (!pairs.empty()) {
    PairEntry pe = *pairs.begin();
    pairs.erase(pairs.begin());
    if (++processed > budget.max_pairs) throw budget_exhausted(processed);

    const Polynomial &f = basis[pe.i], &g = basis[pe.j];
    const Term &ltf = f.leading(), &ltg = g.leading();
    Monomial mf = mono_div(pe.lcm, ltf.mono), mg = mono_div(pe.lcm, ltg.mono);

    std::vector<Polynomial> candidates;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), ltf.coeff.get_mpz_t(), ltg.coeff.get_mpz_t());
    candidates.push_back(f.times_term(l / ltf.coeff, mf) - g.times_term(l / ltg.coeff, mg));
    // gcd combination needed only when neither leading coefficient divides the other
    if (ltf.coeff % ltg.coeff != 0 && ltg.coeff % ltf.coeff != 0) {
      mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), ltf.coeff.get_mpz_t(),
                 ltg.coeff.get_mpz_t());
      candidates.push_back(f.times_term(s, mf) + g.times_term(t, mg));
    }

    for (auto& h : candidates) {
      Polynomial r = reduce_full(h, basis);
      if (r.is_zero()) continue;
      r = r.abs_normalized();
      if (r.is_unit_constant()) return unit_basis();
      basis.push_back(std::move(r));
      push_pairs(basis.size() - 1);
    }
  }

  if (interreduce(basis)) return unit_basis();
  return GroebnerBasis(std::move(basis), nv, ord, true);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (p.nvars() != gb.nvars() || p.order() != gb.order())
    throw std::invalid_argument("normal form ring mismatch");
  return reduce_full(p, gb.elements());
}

namespace {

// Compact per-generator view for fast evaluation mod p.
struct ModGen {
  std::vector<std::pair<Monomial, long>> terms;  // coeff reduced to [0, p)
};

bool vanishes_everywhere_sample(const std::vector<ModGen>& gens, int nvars, long p,
                                std::vector<long>& point) {
  // odometer over {0..p-1}^nvars, generators checked with early abort
  std::vector<long> v(nvars, 0);
  for (;;) {
    bool all_zero = true;
    for (const auto& g : gens) {
      long acc = 0;
      for (const auto& [mono, c] : g.terms) {
        long prod = c;
        for (int i = 0; i < nvars && prod; ++i)
          for (int e = 0; e < mono[i]; ++e) prod = (prod * v[i]) % p;
        acc = (acc + prod) % p;
      }
      if (acc % p != 0) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) {
      point = v;
      return true;
    }
    int k = 0;
    while (k < nvars && ++v[k] == p) v[k++] = 0;
    if (k == nvars) return false;
  }
}

std::optional<std::pair<std::vector<long>, long>> find_modp_witness(const Ideal& ideal,
                                                                    const mpz_class& const_gcd) {
  int nv = ideal.nvars();
  for (long p : {2L, 3L, 5L}) {
    // a witness mod p requires every constant generator to vanish mod p
    if (const_gcd != 0 && const_gcd % p != 0) continue;
    double points = 1;
    for (int i = 0; i < nv; ++i) points *= static_cast<double>(p);
    if (points > 4e6) continue;
    std::vector<ModGen> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) {
      ModGen mg;
      for (const auto& t : g.terms()) {
        long c = static_cast<long>(mpz_fdiv_ui(t.coeff.get_mpz_t(), static_cast<unsigned long>(p)));
        if (c) mg.terms.emplace_back(t.mono, c);
      }
      if (!mg.terms.empty()) gens.push_back(std::move(mg));
    }
    std::sort(gens.begin(), gens.end(),
              [](const ModGen& a, const ModGen& b) { return a.terms.size() < b.terms.size(); });
    std::vector<long> point;
    if (vanishes_everywhere_sample(gens, nv, p, point)) return std::make_pair(point, p);
  }
  return std::nullopt;
}

}  // namespace

TrivialityCertificate is_trivial_with_certificate(const Ideal& ideal,
                                                  const GroebnerBudget& budget) {
  TrivialityCertificate cert;

  mpz_class const_gcd = 0;
  bool all_constant = true;
  for (const auto& g : ideal.generators()) {
    if (g.is_unit_constant()) {
      cert.trivial = true;
      cert.via = TrivialityCertificate::Via::unit_generator;
      return cert;
    }
    if (g.is_constant())
      mpz_gcd(const_gcd.get_mpz_t(), const_gcd.get_mpz_t(), g.constant_value().get_mpz_t());
    else
      all_constant = false;
  }
  if (const_gcd == 1) {
    cert.trivial = true;
    cert.via = TrivialityCertificate::Via::constant_gcd;
    return cert;
  }
  if (all_constant) {  // includes the zero ideal
    cert.trivial = false;
    cert.via = TrivialityCertificate::Via::constant_gcd;
    return cert;
  }
  if (ideal.generators().size() == 1) {
    // a principal ideal is the whole ring only for a unit generator
    cert.trivial = false;
    cert.via = TrivialityCertificate::Via::single_generator;
    return cert;
  }
  if (auto w = find_modp_witness(ideal, const_gcd)) {
    cert.trivial = false;
    cert.via = TrivialityCertificate::Via::witness;
    cert.witness_point = w->first;
    cert.witness_modulus = w->second;
    return cert;
  }
  GroebnerBasis gb = groebner(ideal, budget);
  cert.trivial = gb.contains_unit();
  cert.via = TrivialityCertificate::Via::groebner;
  return cert;
}

bool is_trivial(const Ideal& ideal, const GroebnerBudget& budget) {
  return is_trivial_with_certificate(ideal, budget).trivial;
}

bool contains(const Ideal& outer, const Ideal& inner, const GroebnerBudget& budget) {
  if (outer.nvars() != inner.nvars() || outer.order() != inner.order())
    throw std::invalid_argument("ideal ring mismatch");
  GroebnerBasis gb = groebner(outer, budget);
  for (const auto& g : inner.generators())
    if (!normal_form(g, gb).is_zero()) return false;
  return true;
}

bool equal(const Ideal& a, const Ideal& b, const GroebnerBudget& budget) {
  return contains(a, b, budget) && contains(b, a, budget);
}

}  // namespace critid
