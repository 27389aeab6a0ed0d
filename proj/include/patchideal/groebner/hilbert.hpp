#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "patchideal/errors.hpp"
#include "patchideal/groebner/groebner.hpp"
#include "patchideal/polycore/univariate.hpp"

namespace patchideal {

namespace detail {

struct MonomialListLess {
  bool operator()(const std::vector<Monomial>& a, const std::vector<Monomial>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Monomial& x, const Monomial& y) { return key_less(x, y); });
  }
};

// Minimal generators in a canonical order.
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return key_less(a, b);
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return key_less(a, b); });
  return out;
}

class HilbertNumerator {
 public:
  IntPoly operator()(const std::vector<Monomial>& gens) { return compute(minimalize(gens)); }

 private:
  IntPoly compute(const std::vector<Monomial>& gens) {
    if (gens.empty()) return IntPoly::one();
    for (const auto& g : gens)
      if (g.is_one()) return {};
    std::uint64_t seen = 0;
    bool coprime = true;
    for (const auto& g : gens) {
      if (seen & g.support()) {
        coprime = false;
        break;
      }
      seen |= g.support();
    }
    if (coprime) {
      IntPoly p = IntPoly::one();
      for (const auto& g : gens) p = p * IntPoly::one_minus_power(g.degree());
      return p;
    }
    auto it = memo_.find(gens);
    if (it != memo_.end()) return it->second;

    // Pivot on the variable occurring in the most generators:
    // N(I) = N(I + x) + eta * N(I : x).
    std::array<unsigned, kMaxVars> count{};
    for (const auto& g : gens)
      for (std::uint64_t s = g.support(); s; s &= s - 1) ++count[static_cast<std::size_t>(__builtin_ctzll(s))];
    std::size_t x = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
    Monomial mx = Monomial::variable(x);

    std::vector<Monomial> sum{mx}, colon;
    for (const auto& g : gens) {
      if (g[x] == 0) sum.push_back(g);
      Monomial q = g;
      if (g[x] > 0) q.set(x, g[x] - 1);
      colon.push_back(q);
    }
    IntPoly r = compute(minimalize(std::move(sum))) + compute(minimalize(std::move(colon))).shifted(1);
    memo_.emplace(gens, r);
    return r;
  }

  std::map<std::vector<Monomial>, IntPoly, MonomialListLess> memo_;
};

}  // namespace detail

// Numerator of the Hilbert series of k[x_1..x_m]/<gens> over (1 - eta)^m,
// for the standard grading. Independent of m.
inline IntPoly hilbert_numerator(const std::vector<Monomial>& gens) {
  detail::HilbertNumerator h;
  return h(gens);
}

struct HilbertData {
  IntPoly raw;
  std::size_t nVars = 0;
  std::optional<std::size_t> dimension;  // empty for the unit ideal
  IntPoly h;
  bool homogeneousInput = true;
  std::vector<std::string> diagnostics;

  std::int64_t multiplicity() const { return h.at_one(); }
};

// Splits raw = h * (1 - eta)^(nVars - dim).
inline HilbertData hilbert_from_numerator(IntPoly raw, std::size_t nVars) {
  HilbertData d;
  d.raw = raw;
  d.nVars = nVars;
  if (raw.is_zero()) return d;
  std::size_t c = 0;
  IntPoly q = raw;
  while (auto next = q.divide_one_minus_eta()) {
    q = *next;
    ++c;
  }
  if (c > nVars) throw consistency_error("Hilbert numerator has a root of order above the variable count at eta = 1");
  d.dimension = nVars - c;
  d.h = q;
  if (d.h.at_one() < 1) throw consistency_error("Hilbert polynomial numerator h(1) < 1 for a nonempty scheme");
  return d;
}

inline bool is_standard_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return true;
  unsigned d = p.terms().front().mono.degree();
  return std::all_of(p.terms().begin(), p.terms().end(), [&](const Term& t) { return t.mono.degree() == d; });
}

// Number of variables an ideal lives in: the chart variables, plus t when any
// generator mentions it.
inline std::size_t ambient_vars(const Ideal& I) {
  bool t = std::any_of(I.generators().begin(), I.generators().end(), [](const Polynomial& g) { return g.mentions_homog(); });
  return I.ring()->chart_size() + (t ? 1 : 0);
}

// Hilbert data of the quotient by the initial ideal under the default order.
// For generators that are not homogeneous this describes the leading-term
// degeneration only, and homogeneousInput is false.
inline HilbertData hilbert_of_quotient(const Ideal& I, std::optional<std::size_t> expectedDim = std::nullopt) {
  std::size_t m = ambient_vars(I);
  HilbertData d = hilbert_from_numerator(hilbert_numerator(initial_ideal(I, TermOrder::grevlex(*I.ring()))), m);
  d.homogeneousInput = std::all_of(I.generators().begin(), I.generators().end(), is_standard_homogeneous);
  if (!d.homogeneousInput) d.diagnostics.push_back("inhomogeneous input: Hilbert data of the initial ideal only");
  if (expectedDim && d.dimension != expectedDim) {
    d.diagnostics.push_back("dimension mismatch: expected " + std::to_string(*expectedDim) + ", computed " +
                            (d.dimension ? std::to_string(*d.dimension) : std::string("empty")));
  }
  return d;
}

// Krull dimension of the quotient; nullopt for the unit ideal.
inline std::optional<std::size_t> krull_dimension(const Ideal& I) {
  return hilbert_from_numerator(hilbert_numerator(initial_ideal(I, TermOrder::grevlex(*I.ring()))),
                                ambient_vars(I))
      .dimension;
}

namespace detail {

// Size of a smallest variable set meeting every support, by branching on the
// variables of an unmet support; earlier branches' variables are forbidden in
// later ones.
inline std::size_t min_transversal(const std::vector<std::uint64_t>& sets, std::uint64_t chosen, std::uint64_t banned,
                                   std::size_t size, std::size_t best) {
  if (size >= best) return best;
  std::uint64_t unmet = 0;
  int width = 65;
  for (std::uint64_t s : sets) {
    if (s & chosen) continue;
    std::uint64_t open = s & ~banned;
    if (open == 0) return best;
    if (__builtin_popcountll(open) < width) {
      unmet = open;
      width = __builtin_popcountll(open);
    }
  }
  if (width == 65) return size;
  for (std::uint64_t r = unmet; r; r &= r - 1) {
    std::uint64_t v = r & (~r + 1);
    best = min_transversal(sets, chosen | v, banned, size + 1, best);
    banned |= v;
  }
  return best;
}

}  // namespace detail

// Krull dimension of k[x_1..x_nVars] / <gens> for monomials gens; nullopt when
// a generator is 1.
inline std::optional<std::size_t> monomial_dimension(const std::vector<Monomial>& gens, std::size_t nVars) {
  std::vector<std::uint64_t> sets;
  for (const auto& g : gens) {
    if (g.is_one()) return std::nullopt;
    sets.push_back(g.support());
  }
  return nVars - detail::min_transversal(sets, 0, 0, 0, nVars + 1);
}

struct LinearElimination {
  std::vector<Polynomial> gens;
  std::size_t eliminated = 0;
};

// Repeatedly removes a variable x that a generator determines, g = c*x + h
// with c a nonzero constant and x absent from h, substituting x = -h/c into
// the other generators. The quotient ring is unchanged up to isomorphism while
// each step uses up one variable. Among candidates the shortest g is used.
inline LinearElimination eliminate_linear_variables(std::vector<Polynomial> gens) {
  LinearElimination out;
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_zero(); }), gens.end());
  for (;;) {
    std::size_t bestG = 0, bestVar = 0, bestLen = 0;
    bool found = false;
    for (std::size_t a = 0; a < gens.size(); ++a) {
      const Polynomial& g = gens[a];
      std::uint64_t linear = 0, other = 0;
      for (const auto& t : g.terms()) {
        if (t.mono.degree() == 1) linear |= t.mono.support();
        else other |= t.mono.support();
      }
      std::uint64_t cand = linear & ~other & ~(std::uint64_t{1} << g.ring()->homog_index());
      if (cand && (!found || g.size() < bestLen)) {
        found = true;
        bestG = a;
        bestVar = static_cast<std::size_t>(__builtin_ctzll(cand));
        bestLen = g.size();
      }
    }
    if (!found) break;
    Polynomial g = gens[bestG];
    const RingPtr& ring = g.ring();
    Polynomial x = Polynomial::variable(ring, ring->var(bestVar));
    Rational c;
    for (const auto& t : g.terms())
      if (t.mono == x.terms().front().mono) c = t.coef;
    Polynomial image = (Rational(-1) / c) * (g - c * x);
    std::map<VarId, Polynomial> sub{{ring->var(bestVar), image}};
    std::vector<Polynomial> next;
    for (std::size_t a = 0; a < gens.size(); ++a) {
      if (a == bestG) continue;
      Polynomial r = substitute_affine(gens[a], sub);
      if (!r.is_zero()) next.push_back(r.normalized());
    }
    gens = std::move(next);
    ++out.eliminated;
  }
  out.gens = std::move(gens);
  return out;
}

// Krull dimension of an ideal of chart variables whose generators all vanish
// at the origin. Each component has dimension at least #vars - #generators by
// the height theorem, and the leading monomials of a partial Groebner basis
// bound the dimension from above, so the basis computation stops once the
// two bounds meet.
inline std::size_t pointed_krull_dimension(const Ideal& I, const TermOrder& ord) {
  const RingPtr& ring = I.ring();
  std::size_t nVars = ring->chart_size();
  std::vector<detail::IPoly> in;
  for (const auto& g : I.generators()) {
    if (g.is_zero()) continue;
    if (g.mentions_homog()) throw std::invalid_argument("pointed_krull_dimension needs chart variables only");
    if (g.constant_term() != 0) throw precondition_error("generator does not vanish at the origin: " + g.str());
    auto ip = detail::to_ipoly(g, ord);
    detail::make_primitive(ip);
    in.push_back(std::move(ip));
  }
  std::size_t lower = nVars > in.size() ? nVars - in.size() : 0;
  detail::Buchberger engine(ord, [&](const std::vector<Monomial>& leads) {
    return monomial_dimension(leads, nVars) <= lower;
  });
  if (!engine.run(in)) throw consistency_error("an ideal vanishing at the origin reduced to the unit ideal");
  if (engine.stopped()) return lower;
  auto d = monomial_dimension(engine.leading_monomials(), nVars);
  if (!d || *d < lower) throw consistency_error("dimension below the height bound");
  return *d;
}

}  // namespace patchideal
