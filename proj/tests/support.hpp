#pragma once

#include <random>
#include <vector>

#include "patchideal/patchideal.hpp"

namespace testing_support {

using namespace patchideal;

// The chart ring of the identity of S_n: variables z_ij with i > j.
inline RingPtr lower_ring(int n) {
  std::vector<std::pair<int, int>> pos;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j) pos.emplace_back(i, j);
  return make_ring(pos);
}

inline Rational small_rational(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 11) - 5;
  long den = static_cast<long>(rng() % 3) + 1;
  return make_rational(num, den);
}

// Random polynomial in the chart variables with up to `terms` terms of
// degree at most `deg`.
inline Polynomial random_poly(const RingPtr& ring, std::mt19937_64& rng, int terms = 4, unsigned deg = 3,
                              bool withT = false) {
  std::vector<Term> ts;
  std::size_t nv = withT ? ring->size() : ring->chart_size();
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    unsigned d = static_cast<unsigned>(rng() % (deg + 1));
    for (unsigned e = 0; e < d; ++e) {
      std::size_t v = rng() % nv;
      m.set(v, m[v] + 1);
    }
    ts.push_back({m, small_rational(rng)});
  }
  return Polynomial(ring, std::move(ts));
}

inline std::vector<Rational> random_point(const RingPtr& ring, std::mt19937_64& rng) {
  std::vector<Rational> p(ring->size());
  for (auto& v : p) v = small_rational(rng);
  return p;
}

// Dimension of the monomial ideal's quotient: the largest set of variables
// containing the support of no generator (brute force over subsets).
inline std::size_t monomial_dimension(const std::vector<Monomial>& gens, std::size_t nVars) {
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << nVars); ++s) {
    bool free = true;
    for (const auto& g : gens)
      if ((g.support() & ~s) == 0) {
        free = false;
        break;
      }
    if (free) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(s)));
  }
  return best;
}

// Number of monomials of each degree 0..maxDeg in nVars variables outside the
// monomial ideal (brute-force enumeration).
inline std::vector<long> standard_monomial_counts(const std::vector<Monomial>& gens, std::size_t nVars,
                                                  unsigned maxDeg) {
  std::vector<long> counts(maxDeg + 1, 0);
  Monomial m;
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var == nVars) {
      for (const auto& g : gens)
        if (g.divides(m)) return;
      ++counts[m.degree()];
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m.set(var, e);
      self(self, var + 1, left - e);
    }
    m.set(var, 0);
  };
  rec(rec, 0, maxDeg);
  return counts;
}

// Power series coefficients 0..maxDeg of N(eta) / (1 - eta)^nVars.
inline std::vector<long> series(const IntPoly& num, std::size_t nVars, unsigned maxDeg) {
  std::vector<long> c(maxDeg + 1, 0);
  for (std::size_t k = 0; k < num.coeffs().size() && k <= maxDeg; ++k) c[k] = num.coeffs()[k];
  for (std::size_t r = 0; r < nVars; ++r)
    for (unsigned d = 1; d <= maxDeg; ++d) c[d] += c[d - 1];
  return c;
}

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long a = 1; a <= k; ++a) r = r * (n - k + a) / a;
  return r;
}

}  // namespace testing_support
