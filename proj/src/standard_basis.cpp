#include "germ/standard_basis.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <utility>

#include "germ/errors.hpp"

namespace germ {
namespace {

// Engine-local representation: fixed-width exponent vectors with a cached
// total degree, and term lists kept sorted largest-first under the local
// order.  The back of a term list is its highest-degree term, so the ecart is
// a constant-time read.
constexpr std::size_t kMaxVars = 12;

struct EMono {
  std::array<std::uint16_t, kMaxVars> e{};
  unsigned deg = 0;
};

// +1 when a is larger under anti-graded revlex, -1 smaller, 0 equal.
int emcmp(const EMono& a, const EMono& b, std::size_t nv) {
  if (a.deg != b.deg) return a.deg < b.deg ? 1 : -1;
  for (std::size_t i = nv; i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

bool edivides(const EMono& a, const EMono& b, std::size_t nv) {
  if (a.deg > b.deg) return false;
  for (std::size_t i = 0; i < nv; ++i) {
    if (a.e[i] > b.e[i]) return false;
  }
  return true;
}

EMono emul(const EMono& a, const EMono& b, std::size_t nv) {
  EMono r;
  for (std::size_t i = 0; i < nv; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  r.deg = a.deg + b.deg;
  return r;
}

// b / a; pre: a divides b.
EMono equot(const EMono& b, const EMono& a, std::size_t nv) {
  EMono r;
  for (std::size_t i = 0; i < nv; ++i) r.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
  r.deg = b.deg - a.deg;
  return r;
}

EMono elcm(const EMono& a, const EMono& b, std::size_t nv) {
  EMono r;
  unsigned d = 0;
  for (std::size_t i = 0; i < nv; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    d += r.e[i];
  }
  r.deg = d;
  return r;
}

bool ecoprime(const EMono& a, const EMono& b, std::size_t nv) {
  for (std::size_t i = 0; i < nv; ++i) {
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  }
  return true;
}

struct ETerm {
  EMono m;
  Rational c;
};

struct EPoly {
  std::vector<ETerm> t;  // sorted, largest local-order term first

  bool zero() const { return t.empty(); }
  const EMono& lead() const { return t.front().m; }
  const Rational& lc() const { return t.front().c; }
  unsigned ecart() const { return t.back().m.deg - t.front().m.deg; }
};

// cf * x^sf * f + cg * x^sg * g, by merging the two sorted term lists
// (shifting by a fixed monomial preserves the local order).
EPoly combine(const EPoly& f, const Rational& cf, const EMono& sf,
              const EPoly& g, const Rational& cg, const EMono& sg, std::size_t nv) {
  EPoly r;
  r.t.reserve(f.t.size() + g.t.size());
  std::size_t ia = 0, ib = 0;
  EMono ma, mb;
  if (ia < f.t.size()) ma = emul(f.t[ia].m, sf, nv);
  if (ib < g.t.size()) mb = emul(g.t[ib].m, sg, nv);
  while (ia < f.t.size() || ib < g.t.size()) {
    int which;  // -1 take from f, +1 take from g, 0 combine both
    if (ia >= f.t.size()) {
      which = 1;
    } else if (ib >= g.t.size()) {
      which = -1;
    } else {
      int c = emcmp(ma, mb, nv);
      which = c > 0 ? -1 : (c < 0 ? 1 : 0);
    }
    if (which == 0) {
      Rational v = cf * f.t[ia].c + cg * g.t[ib].c;
      if (v != 0) r.t.push_back({ma, std::move(v)});
      if (++ia < f.t.size()) ma = emul(f.t[ia].m, sf, nv);
      if (++ib < g.t.size()) mb = emul(g.t[ib].m, sg, nv);
    } else if (which < 0) {
      Rational v = cf * f.t[ia].c;
      if (v != 0) r.t.push_back({ma, std::move(v)});
      if (++ia < f.t.size()) ma = emul(f.t[ia].m, sf, nv);
    } else {
      Rational v = cg * g.t[ib].c;
      if (v != 0) r.t.push_back({mb, std::move(v)});
      if (++ib < g.t.size()) mb = emul(g.t[ib].m, sg, nv);
    }
  }
  return r;
}

// Clears denominators and integer content, making the lead coefficient a
// positive integer.  Scaling by a unit leaves the ideal unchanged.
void primitivize(EPoly& p) {
  if (p.t.empty()) return;
  Int den = 1;
  for (const ETerm& t : p.t) den = lcm(den, t.c.get_den());
  Int g = 0;
  for (const ETerm& t : p.t) {
    Int n = t.c.get_num() * (den / t.c.get_den());
    g = gcd(g, n);
  }
  if (g == 0) return;
  Rational scale(den, g);
  scale.canonicalize();
  if (sgn(p.t.front().c) < 0) scale = -scale;
  if (scale == 1) return;
  for (ETerm& t : p.t) t.c *= scale;
}

EMono to_emono(const Monomial& m) {
  EMono r;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] > 0xffffu) throw std::invalid_argument("exponent too large for the standard basis engine");
    r.e[i] = static_cast<std::uint16_t>(m.e[i]);
    r.deg += m.e[i];
  }
  return r;
}

EPoly to_epoly(const Polynomial& f, std::size_t nv) {
  EPoly r;
  r.t.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) r.t.push_back({to_emono(m), c});
  std::sort(r.t.begin(), r.t.end(),
            [nv](const ETerm& a, const ETerm& b) { return emcmp(a.m, b.m, nv) > 0; });
  return r;
}

Polynomial to_polynomial(const EPoly& p, std::size_t nv) {
  Polynomial r(nv);
  for (const ETerm& t : p.t) {
    Monomial m = Monomial::one(nv);
    for (std::size_t i = 0; i < nv; ++i) m.e[i] = t.m.e[i];
    r.add_term(m, t.c);
  }
  return r;
}

Monomial to_monomial(const EMono& m, std::size_t nv) {
  Monomial r = Monomial::one(nv);
  for (std::size_t i = 0; i < nv; ++i) r.e[i] = m.e[i];
  return r;
}

std::size_t checked_num_vars(const std::vector<Polynomial>& polys, const LocalOrder& order) {
  std::size_t nv = order.num_vars;
  for (const Polynomial& p : polys) {
    if (p.num_vars() != nv) throw DimensionMismatch("generator variable count does not match the order");
  }
  if (nv > kMaxVars) throw DimensionMismatch("too many variables for the standard basis engine");
  return nv;
}

// Mora weak normal form.  The reducer set starts as the basis and grows by
// snapshots of the intermediate remainder whenever the selected reducer has
// strictly larger ecart; that rule is what bounds the ecart and forces
// termination under the local order.
struct RedEntry {
  const EPoly* p;
  unsigned ecart;
};

EPoly nf_mora(EPoly h, const std::vector<EPoly>& basis, std::size_t nv) {
  std::vector<RedEntry> reducers;
  reducers.reserve(basis.size());
  for (const EPoly& b : basis) {
    if (!b.zero()) reducers.push_back({&b, b.ecart()});
  }
  std::deque<EPoly> snapshots;  // stable addresses for reducers added mid-run
  while (!h.zero()) {
    int best = -1;
    for (std::size_t i = 0; i < reducers.size(); ++i) {
      if (!edivides(reducers[i].p->lead(), h.lead(), nv)) continue;
      if (best < 0 || reducers[i].ecart < reducers[static_cast<std::size_t>(best)].ecart) {
        best = static_cast<int>(i);  // strict < keeps the oldest on ties
      }
    }
    if (best < 0) break;
    const std::size_t bi = static_cast<std::size_t>(best);
    const unsigned he = h.ecart();
    if (reducers[bi].ecart > he) {
      snapshots.push_back(h);
      reducers.push_back({&snapshots.back(), he});
    }
    const EPoly& g = *reducers[bi].p;
    Rational c = -(h.lc() / g.lc());
    EMono s = equot(h.lead(), g.lead(), nv);
    h = combine(h, Rational(1), EMono{}, g, c, s, nv);
  }
  return h;
}

struct Completion {
  std::vector<EPoly> basis;
  bool cap_hit = false;
};

EPoly make_spoly(const EPoly& f, const EPoly& g, std::size_t nv) {
  EMono l = elcm(f.lead(), g.lead(), nv);
  Rational cf = 1 / f.lc();
  Rational cg = -(1 / g.lc());
  return combine(f, cf, equot(l, f.lead(), nv), g, cg, equot(l, g.lead(), nv), nv);
}

Completion complete(std::vector<EPoly> basis, std::size_t nv, unsigned degree_cap) {
  struct Pair {
    EPoly spoly;  // stored at creation time
    unsigned age;
  };
  std::vector<Pair> pending;
  unsigned next_age = 0;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (ecoprime(basis[i].lead(), basis[j].lead(), nv)) continue;  // product criterion
      EPoly s = make_spoly(basis[i], basis[j], nv);
      if (!s.zero()) pending.push_back({std::move(s), next_age++});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs(j);

  Completion out;
  while (!pending.empty()) {
    // Largest S-polynomial lead first; oldest pair on ties.
    std::size_t pick = 0;
    for (std::size_t i = 1; i < pending.size(); ++i) {
      int c = emcmp(pending[i].spoly.lead(), pending[pick].spoly.lead(), nv);
      if (c > 0 || (c == 0 && pending[i].age < pending[pick].age)) pick = i;
    }
    EPoly s = std::move(pending[pick].spoly);
    pending[pick] = std::move(pending.back());
    pending.pop_back();

    EPoly r = nf_mora(std::move(s), basis, nv);
    if (r.zero()) continue;
    if (r.lead().deg > degree_cap) {
      out.cap_hit = true;
      continue;
    }
    primitivize(r);
    basis.push_back(std::move(r));
    add_pairs(basis.size() - 1);
  }
  out.basis = std::move(basis);
  return out;
}

// Drop every element whose lead is divisible by another element's lead.
// Leads are pairwise distinct (a new element's lead is never divisible by an
// existing one), so divisibility here is strict and this cannot empty a
// nonempty basis.
void minimalize(std::vector<EPoly>& basis, std::size_t nv) {
  std::vector<char> keep(basis.size(), 1);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (j != i && edivides(basis[j].lead(), basis[i].lead(), nv)) {
        keep[i] = 0;
        break;
      }
    }
  }
  std::vector<EPoly> kept;
  kept.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (keep[i]) kept.push_back(std::move(basis[i]));
  }
  basis = std::move(kept);
  std::sort(basis.begin(), basis.end(),
            [nv](const EPoly& a, const EPoly& b) { return emcmp(a.lead(), b.lead(), nv) > 0; });
}

std::vector<EPoly> prepare_generators(const std::vector<Polynomial>& generators, const LocalOrder& order,
                                      std::size_t* nv_out) {
  const std::size_t nv = checked_num_vars(generators, order);
  std::vector<EPoly> basis;
  basis.reserve(generators.size());
  for (const Polynomial& g : generators) {
    if (g.is_zero()) continue;
    EPoly e = to_epoly(g, nv);
    primitivize(e);
    basis.push_back(std::move(e));
  }
  if (basis.empty()) throw EmptyGenerators();
  *nv_out = nv;
  return basis;
}

}  // namespace

Monomial local_leading_monomial(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  const Monomial* best = nullptr;
  for (const auto& [m, c] : f.terms()) {
    if (best == nullptr || local_compare(m, *best) > 0) best = &m;
  }
  return *best;
}

unsigned default_degree_cap(const std::vector<Polynomial>& generators) {
  unsigned long long total = 0;
  for (const Polynomial& g : generators) {
    if (!g.is_zero()) total += g.degree();
  }
  unsigned long long cap = 2 * total + 4;
  return cap > 0xffffffffull ? 0xffffffffu : static_cast<unsigned>(cap);
}

Polynomial mora_normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const LocalOrder& order) {
  std::size_t nv = order.num_vars;
  if (f.num_vars() != nv) throw DimensionMismatch("polynomial variable count does not match the order");
  checked_num_vars(basis, order);
  if (f.is_zero()) return Polynomial(nv);
  std::vector<EPoly> eb;
  eb.reserve(basis.size());
  for (const Polynomial& b : basis) {
    if (!b.is_zero()) eb.push_back(to_epoly(b, nv));
  }
  EPoly r = nf_mora(to_epoly(f, nv), eb, nv);
  return to_polynomial(r, nv);
}

StandardBasisResult standard_basis(const std::vector<Polynomial>& generators, const LocalOrder& order,
                                   unsigned degree_cap) {
  std::size_t nv = 0;
  std::vector<EPoly> basis = prepare_generators(generators, order, &nv);
  for (const EPoly& b : basis) {
    if (b.t.back().m.deg > degree_cap) {
      throw std::invalid_argument("degree cap is below the total degree of a generator");
    }
  }
  Completion done = complete(std::move(basis), nv, degree_cap);
  minimalize(done.basis, nv);

  StandardBasisResult out;
  out.degree_cap_hit = done.cap_hit;
  out.degree_cap = degree_cap;
  out.generators.reserve(done.basis.size());
  out.leading_monomials.reserve(done.basis.size());
  for (const EPoly& b : done.basis) {
    out.generators.push_back(to_polynomial(b, nv));
    out.leading_monomials.push_back(to_monomial(b.lead(), nv));
  }
  return out;
}

Colength colength(const std::vector<Polynomial>& generators, const LocalOrder& order, unsigned degree_cap) {
  std::size_t nv = 0;
  std::vector<EPoly> basis = prepare_generators(generators, order, &nv);
  for (const EPoly& b : basis) {
    if (b.t.back().m.deg > degree_cap) {
      throw std::invalid_argument("degree cap is below the total degree of a generator");
    }
  }
  Completion done = complete(std::move(basis), nv, degree_cap);
  minimalize(done.basis, nv);

  Colength out;
  out.degree_cap = degree_cap;

  std::vector<EMono> leads;
  leads.reserve(done.basis.size());
  for (const EPoly& b : done.basis) leads.push_back(b.lead());

  // A unit in the ideal: the quotient is the zero ring.
  for (const EMono& l : leads) {
    if (l.deg == 0) {
      out.status = Colength::Status::Finite;
      out.value = 0;
      return out;
    }
  }

  // Pure powers bound the staircase box; a missing one means the quotient is
  // infinite-dimensional -- but only a complete basis can certify that.
  std::vector<unsigned> bound(nv, 0);
  for (const EMono& l : leads) {
    std::size_t support_var = nv;
    bool pure = true;
    for (std::size_t i = 0; i < nv && pure; ++i) {
      if (l.e[i] == 0) continue;
      if (support_var == nv) {
        support_var = i;
      } else {
        pure = false;
      }
    }
    if (pure && support_var < nv) {
      unsigned p = l.e[support_var];
      if (bound[support_var] == 0 || p < bound[support_var]) bound[support_var] = p;
    }
  }
  for (std::size_t i = 0; i < nv; ++i) {
    if (bound[i] == 0) {
      out.status = done.cap_hit ? Colength::Status::Inconclusive : Colength::Status::NonIsolated;
      return out;
    }
  }

  // Count monomials in the box below the pure powers that no lead divides.
  // When the cap was hit, every dropped basis element has lead degree above
  // the cap, so the count is still exact as long as no counted monomial
  // reaches past the cap.
  unsigned long long count = 0;
  unsigned max_counted_deg = 0;
  std::vector<unsigned> v(nv, 0);
  for (;;) {
    EMono m;
    for (std::size_t i = 0; i < nv; ++i) {
      m.e[i] = static_cast<std::uint16_t>(v[i]);
      m.deg += v[i];
    }
    bool standard = true;
    for (const EMono& l : leads) {
      if (edivides(l, m, nv)) {
        standard = false;
        break;
      }
    }
    if (standard) {
      ++count;
      max_counted_deg = std::max(max_counted_deg, m.deg);
    }
    std::size_t pos = 0;
    while (pos < nv && ++v[pos] >= bound[pos]) {
      v[pos] = 0;
      ++pos;
    }
    if (pos == nv) break;
  }

  if (done.cap_hit && max_counted_deg > degree_cap) {
    out.status = Colength::Status::Inconclusive;
    return out;
  }
  out.status = Colength::Status::Finite;
  out.value = count;
  return out;
}

}  // namespace germ
