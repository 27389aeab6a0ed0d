#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "patchideal/polycore/polynomial.hpp"
#include "patchideal/polycore/term_order.hpp"

namespace patchideal {

namespace detail {

// Integer-coefficient working form used inside the Groebner engine, terms
// sorted descending under the active order. Reductions are fraction-free.
struct ITerm {
  Monomial m;
  Integer c;
};
using IPoly = std::vector<ITerm>;

inline void sort_desc(IPoly& p, const TermOrder& ord) {
  std::sort(p.begin(), p.end(), [&](const ITerm& a, const ITerm& b) { return ord.compare(a.m, b.m) > 0; });
}

inline Integer content(const IPoly& p) {
  Integer g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline void divide_exact(IPoly& p, const Integer& d) {
  if (d == 1 || d == 0) return;
  for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), d.get_mpz_t());
}

inline void make_primitive(IPoly& p) {
  if (p.empty()) return;
  Integer g = content(p);
  if (p.front().c < 0) g = -g;
  divide_exact(p, g);
}

// p scaled to integers; returns the positive factor s with result = s * p.
inline IPoly to_ipoly(const Polynomial& p, const TermOrder& ord, Rational* scale = nullptr) {
  Integer den = 1;
  for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
  IPoly out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Integer c = t.coef.get_num() * (den / t.coef.get_den());
    out.push_back({t.mono, std::move(c)});
  }
  sort_desc(out, ord);
  if (scale) *scale = den;
  return out;
}

inline Polynomial from_ipoly(const RingPtr& ring, const IPoly& p, const Rational& divisor = 1) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) terms.push_back({t.m, Rational(t.c) / divisor});
  return Polynomial(ring, std::move(terms));
}

// a*p - b*(m*g), merging two ordered term lists; p is consumed.
inline IPoly combine(const Integer& a, IPoly&& p, std::size_t from, const Integer& b, const Monomial& m,
                     const IPoly& g, const TermOrder& ord) {
  IPoly r;
  r.reserve(p.size() - from + g.size());
  std::size_t i = from, j = 0;
  bool unit = a == 1;
  Monomial mg;
  if (!g.empty()) mg = m * g[0].m;
  while (i < p.size() || j < g.size()) {
    int c;
    if (i == p.size()) c = -1;
    else if (j == g.size()) c = 1;
    else c = ord.compare(p[i].m, mg);
    if (c > 0) {
      if (!unit) p[i].c *= a;
      r.push_back(std::move(p[i]));
      ++i;
    } else {
      if (c < 0) {
        r.push_back({mg, Integer(-b * g[j].c)});
      } else {
        if (!unit) p[i].c *= a;
        mpz_submul(p[i].c.get_mpz_t(), b.get_mpz_t(), g[j].c.get_mpz_t());
        if (p[i].c != 0) r.push_back(std::move(p[i]));
        ++i;
      }
      if (++j < g.size()) mg = m * g[j].m;
    }
  }
  return r;
}

enum class Reduce { full, tail, top };

// Reduction of p modulo the leading terms of `basis`, up to a nonzero integer
// factor: every term (full), every term but the leading one (tail), or only
// until the leading term is irreducible (top). Reducers are tried in list order.
inline IPoly reduce_full(IPoly p, const std::vector<const IPoly*>& basis, const TermOrder& ord,
                         Reduce mode = Reduce::full) {
  IPoly r;
  std::size_t pos = 0;
  if (mode == Reduce::tail && !p.empty()) r.push_back(p[pos++]);
  unsigned steps = 0;
  while (pos < p.size()) {
    if (mode == Reduce::top && !r.empty()) {
      for (; pos < p.size(); ++pos) r.push_back(std::move(p[pos]));
      break;
    }
    const IPoly* red = nullptr;
    for (const IPoly* g : basis)
      if (g->front().m.divides(p[pos].m) && (!red || g->size() < red->size())) red = g;
    if (!red) {
      r.push_back(std::move(p[pos++]));
      continue;
    }
    Integer lg = red->front().c, lp = p[pos].c, gcd;
    mpz_gcd(gcd.get_mpz_t(), lg.get_mpz_t(), lp.get_mpz_t());
    Integer a = lg / gcd, b = lp / gcd;
    if (a < 0) a = -a, b = -b;
    Monomial m = quotient(p[pos].m, red->front().m);
    p = combine(a, std::move(p), pos, b, m, *red, ord);
    pos = 0;
    if (a != 1)
      for (auto& t : r) t.c *= a;
    if (++steps % 16 == 0 && !r.empty()) {
      Integer g = content(r);
      for (const auto& t : p) {
        if (g == 1) break;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
      }
      divide_exact(r, g);
      divide_exact(p, g);
    }
  }
  return r;
}

}  // namespace detail

// Leading term of p under ord.
inline const Term& leading_term(const Polynomial& p, const TermOrder& ord) {
  if (p.is_zero()) throw degenerate_input_error("zero polynomial has no leading term");
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (ord.compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

// Remainder of p on division by G (in list order): p - r lies in <G> and no
// term of r is divisible by a leading term of G.
inline Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G, const TermOrder& ord) {
  if (p.is_zero()) return p;
  std::vector<detail::IPoly> gs;
  gs.reserve(G.size());
  for (const auto& g : G) {
    if (g.is_zero()) throw degenerate_input_error("zero polynomial in a divisor list");
    require_same_ring(p.ring(), g.ring());
    gs.push_back(detail::to_ipoly(g, ord));
  }
  std::vector<const detail::IPoly*> basis;
  for (const auto& g : gs) basis.push_back(&g);
  // Work without content removal so that the scale is exact.
  Rational den;
  detail::IPoly ip = detail::to_ipoly(p, ord, &den);
  Integer s = 1;
  detail::IPoly r;
  std::size_t pos = 0;
  while (pos < ip.size()) {
    const detail::IPoly* red = nullptr;
    for (const auto* g : basis)
      if (g->front().m.divides(ip[pos].m)) {
        red = g;
        break;
      }
    if (!red) {
      r.push_back(ip[pos++]);
      continue;
    }
    Integer lg = red->front().c, lp = ip[pos].c, gcd;
    mpz_gcd(gcd.get_mpz_t(), lg.get_mpz_t(), lp.get_mpz_t());
    Integer a = lg / gcd, b = lp / gcd;
    if (a < 0) a = -a, b = -b;
    Monomial m = quotient(ip[pos].m, red->front().m);
    ip = detail::combine(a, std::move(ip), pos, b, m, *red, ord);
    pos = 0;
    if (a != 1) {
      for (auto& t : r) t.c *= a;
      s *= a;
    }
  }
  return detail::from_ipoly(p.ring(), r, Rational(s) * den);
}

namespace detail {

struct GbPair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

class Buchberger {
 public:
  using StopTest = std::function<bool(const std::vector<Monomial>&)>;

  Buchberger(const TermOrder& ord, StopTest stop = {}) : ord_(ord), stop_(std::move(stop)) {}

  // Returns false when the ideal is the unit ideal. A stop test, called with
  // the current leading monomials after each new basis element, may end the
  // run early; stopped() then reports it.
  bool run(const std::vector<IPoly>& inputs) {
    for (const auto& f : inputs) {
      if (f.empty()) continue;
      if (!add(f, degree(f))) return false;
    }
    if (should_stop()) return true;
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      GbPair pr = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      IPoly s = spoly(pr);
      std::size_t before = store_.size();
      if (!add(std::move(s), pr.sugar)) return false;
      if (store_.size() != before && should_stop()) return true;
    }
    return true;
  }

  bool stopped() const { return stopped_; }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (std::size_t k : active_) out.push_back(store_[k].front().m);
    return out;
  }

  // Reduced basis: minimal leading terms, tails fully reduced, primitive.
  std::vector<IPoly> reduced() const {
    std::vector<std::size_t> keep;
    for (std::size_t k : active_) {
      bool redundant = false;
      for (std::size_t l : active_)
        if (l != k && store_[l].front().m.divides(store_[k].front().m) &&
            (!(store_[l].front().m == store_[k].front().m) || l < k)) {
          redundant = true;
          break;
        }
      if (!redundant) keep.push_back(k);
    }
    std::vector<IPoly> out;
    for (std::size_t k : keep) {
      std::vector<const IPoly*> others;
      for (std::size_t l : keep)
        if (l != k) others.push_back(&store_[l]);
      IPoly g = reduce_full(store_[k], others, ord_, Reduce::tail);
      make_primitive(g);
      out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(),
              [&](const IPoly& a, const IPoly& b) { return ord_.compare(a.front().m, b.front().m) < 0; });
    return out;
  }

 private:
  bool should_stop() {
    stopped_ = stop_ && stop_(leading_monomials());
    return stopped_;
  }

  static unsigned degree(const IPoly& p) {
    unsigned d = 0;
    for (const auto& t : p) d = std::max(d, t.m.degree());
    return d;
  }

  bool pair_less(const GbPair& a, const GbPair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = ord_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  IPoly spoly(const GbPair& pr) const {
    const IPoly& f = store_[pr.i];
    const IPoly& g = store_[pr.j];
    Integer gcd;
    mpz_gcd(gcd.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
    Integer a = g.front().c / gcd, b = f.front().c / gcd;
    Monomial mf = quotient(pr.lcm, f.front().m), mg = quotient(pr.lcm, g.front().m);
    IPoly fs;
    fs.reserve(f.size());
    for (const auto& t : f) fs.push_back({mf * t.m, t.c});
    return combine(a, std::move(fs), 0, b, mg, g, ord_);
  }

  bool add(IPoly f, unsigned sugar) {
    std::vector<const IPoly*> basis;
    basis.reserve(active_.size());
    for (std::size_t k : active_) basis.push_back(&store_[k]);
    IPoly h = reduce_full(std::move(f), basis, ord_);
    if (h.empty()) return true;
    make_primitive(h);
    if (h.front().m.is_one()) return false;
    sugar = std::max(sugar, degree(h));
    store_.push_back(std::move(h));
    sugar_.push_back(sugar);
    update(store_.size() - 1);
    return true;
  }

  // Gebauer-Moeller installation of a new basis element.
  void update(std::size_t h) {
    const Monomial& lh = store_[h].front().m;
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool alive = true;
    };
    std::vector<Cand> C;
    for (std::size_t g : active_) {
      const Monomial& lg = store_[g].front().m;
      C.push_back({g, lcm(lh, lg), lh.coprime(lg)});
    }
    // Chain criterion among new pairs: drop (h,g1) when some other (h,g2)
    // has lcm properly dividing it, or equal lcm with a coprime witness kept.
    for (std::size_t a = 0; a < C.size(); ++a) {
      for (std::size_t b = 0; b < C.size() && C[a].alive; ++b) {
        if (a == b || !C[b].alive) continue;
        if (C[b].lcm.divides(C[a].lcm)) {
          bool equal = C[b].lcm == C[a].lcm;
          if (!equal) C[a].alive = false;
          else if (!C[a].coprime && (C[b].coprime || b < a)) C[a].alive = false;
        }
      }
    }
    // Old pairs made redundant by h.
    std::vector<GbPair> kept;
    kept.reserve(pairs_.size());
    for (const auto& p : pairs_) {
      if (lh.divides(p.lcm) && !(lcm(store_[p.i].front().m, lh) == p.lcm) &&
          !(lcm(store_[p.j].front().m, lh) == p.lcm))
        continue;
      kept.push_back(p);
    }
    pairs_ = std::move(kept);
    for (const auto& c : C) {
      if (!c.alive || c.coprime) continue;
      const Monomial& lg = store_[c.g].front().m;
      unsigned s = std::max(sugar_[h] + (c.lcm.degree() - lh.degree()), sugar_[c.g] + (c.lcm.degree() - lg.degree()));
      pairs_.push_back({c.g, h, c.lcm, s});
    }
    std::vector<std::size_t> next;
    for (std::size_t g : active_)
      if (!lh.divides(store_[g].front().m)) next.push_back(g);
    next.push_back(h);
    active_ = std::move(next);
  }

  TermOrder ord_;
  StopTest stop_;
  bool stopped_ = false;
  std::vector<IPoly> store_;
  std::vector<unsigned> sugar_;
  std::vector<std::size_t> active_;
  std::vector<GbPair> pairs_;
};

}  // namespace detail

// The reduced Groebner basis of <gens> under ord: monic, inter-reduced,
// sorted by leading monomial ascending. The unit ideal gives [1] and the
// zero ideal gives [].
inline std::vector<Polynomial> reduced_groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                                      const TermOrder& ord) {
  std::vector<detail::IPoly> in;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    require_same_ring(ring, g.ring());
    auto ip = detail::to_ipoly(g, ord);
    detail::make_primitive(ip);
    in.push_back(std::move(ip));
  }
  std::vector<Polynomial> out;
  detail::Buchberger engine(ord);
  if (!engine.run(in)) {
    out.push_back(Polynomial::constant(ring, 1));
    return out;
  }
  for (const auto& g : engine.reduced()) {
    Polynomial p = detail::from_ipoly(ring, g);
    Rational lead = leading_term(p, ord).coef;
    out.push_back((1 / lead) * p);
  }
  return out;
}

// An ideal of a chart ring given by generators. Groebner bases are cached per
// term order; the cache is shared by copies and guarded by a mutex.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> gens = {})
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      require_same_ring(ring_, g.ring());
      gens_.push_back(std::move(g));
    }
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  const std::vector<Polynomial>& groebner_basis(const TermOrder& ord) const {
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      for (const auto& [o, gb] : cache_->entries)
        if (o == ord) return *gb;
    }
    auto gb = std::make_shared<const std::vector<Polynomial>>(reduced_groebner_basis(ring_, gens_, ord));
    std::lock_guard<std::mutex> lock(cache_->mu);
    for (const auto& [o, existing] : cache_->entries)
      if (o == ord) return *existing;
    cache_->entries.emplace_back(ord, gb);
    return *gb;
  }

  const std::vector<Polynomial>& groebner_basis() const { return groebner_basis(TermOrder::grevlex(*ring_)); }

  bool is_unit() const {
    const auto& gb = groebner_basis();
    return gb.size() == 1 && gb.front().is_constant();
  }

  bool contains(const Polynomial& p, const TermOrder& ord) const {
    return normal_form(p, groebner_basis(ord), ord).is_zero();
  }
  bool contains(const Polynomial& p) const { return contains(p, TermOrder::grevlex(*ring_)); }

 private:
  struct Cache {
    std::mutex mu;
    std::vector<std::pair<TermOrder, std::shared_ptr<const std::vector<Polynomial>>>> entries;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

inline const std::vector<Polynomial>& buchberger(const Ideal& I, const TermOrder& ord) {
  return I.groebner_basis(ord);
}

// Every generator of b lies in a and vice versa.
inline bool same_ideal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  for (const auto& g : b.generators())
    if (!a.contains(g)) return false;
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  return true;
}

// Minimal generators of the initial ideal, ascending under ord.
inline std::vector<Monomial> initial_ideal(const Ideal& I, const TermOrder& ord) {
  std::vector<Monomial> out;
  for (const auto& g : I.groebner_basis(ord)) out.push_back(leading_term(g, ord).mono);
  return out;
}

// Buchberger's criterion: every S-polynomial of G reduces to zero.
inline bool is_groebner_basis(const std::vector<Polynomial>& G, const TermOrder& ord) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      const Term& a = leading_term(G[i], ord);
      const Term& b = leading_term(G[j], ord);
      Monomial L = lcm(a.mono, b.mono);
      Polynomial s = Polynomial::monomial(G[i].ring(), quotient(L, a.mono), 1 / a.coef) * G[i] -
                     Polynomial::monomial(G[j].ring(), quotient(L, b.mono), 1 / b.coef) * G[j];
      if (!normal_form(s, G, ord).is_zero()) return false;
    }
  return true;
}

}  // namespace patchideal
