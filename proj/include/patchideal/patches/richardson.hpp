#pragma once

#include <string>
#include <vector>

#include "patchideal/patches/hessenberg.hpp"

namespace patchideal {

// Determinant by Laplace expansion along rows with memoized column subsets.
inline Polynomial determinant(const std::vector<std::vector<Polynomial>>& m, const RingPtr& ring) {
  std::size_t s = m.size();
  if (s == 0) return Polynomial::constant(ring, 1);
  if (s > 20) throw std::length_error("determinant too large");
  // dp[mask]: determinant of rows 0..popcount(mask)-1 against columns in mask.
  std::vector<Polynomial> dp(std::size_t{1} << s, Polynomial(ring));
  dp[0] = Polynomial::constant(ring, 1);
  for (std::size_t mask = 1; mask < dp.size(); ++mask) {
    std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
    Polynomial acc(ring);
    // Expand along row `row` over the columns in mask, in increasing order.
    int pos = 0;
    for (std::size_t c = 0; c < s; ++c) {
      if (!(mask >> c & 1)) continue;
      const Polynomial& e = m[row][c];
      const Polynomial& rest = dp[mask & ~(std::size_t{1} << c)];
      if (!e.is_zero() && !rest.is_zero()) {
        Polynomial term = e * rest;
        if ((row + static_cast<std::size_t>(pos)) % 2) acc -= term;
        else acc += term;
      }
      ++pos;
    }
    dp[mask] = std::move(acc);
  }
  return dp.back();
}

struct RichardsonOptions {
  // Skip rank conditions implied by neighbouring ones.
  bool prune = false;
};

namespace detail {

inline void choose(int from, int to, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int a = from; a <= to - k + 1; ++a) {
    cur.push_back(a);
    choose(a + 1, to, k - 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> subsets(int from, int to, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (k >= 0 && k <= to - from + 1) choose(from, to, k, cur, out);
  return out;
}

inline void emit_minors(const PatchChart& chart, Tag::Kind kind, int i, int j, int size, int r0, int r1,
                        std::vector<Generator>& out) {
  auto rowsets = subsets(r0, r1, size);
  auto colsets = subsets(1, j, size);
  for (const auto& rows : rowsets)
    for (const auto& cols : colsets) {
      std::vector<std::vector<Polynomial>> m;
      for (int r : rows) {
        std::vector<Polynomial> line;
        for (int c : cols) line.push_back(chart.entry(r, c));
        m.push_back(std::move(line));
      }
      Polynomial d = determinant(m, chart.ring());
      if (d.is_zero()) continue;
      Tag t{kind, i, j, size, rows, cols, 0, false};
      out.push_back({t, d.normalized()});
    }
}

}  // namespace detail

// J_{w,u}: minors of size 1 + r^u_{ij} of the southwest (rows i..n, cols 1..j)
// submatrix, for all (i,j).
inline std::vector<Generator> schubert_minors(const PatchChart& chart, const Permutation& u, RichardsonOptions opts = {}) {
  int n = chart.n();
  RankMatrix r = rank_matrix(u, Orientation::southwest);
  std::vector<Generator> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int size = 1 + r(i, j);
      if (size > std::min(n - i + 1, j)) continue;
      if (opts.prune && (r(i, j) == r(i + 1, j) + 1 || r(i, j) == r(i, j - 1) + 1)) continue;
      detail::emit_minors(chart, Tag::Kind::minor_sw, i, j, size, i, n, out);
    }
  return out;
}

// J^{w,v}: minors of size 1 + rbar^v_{ij} of the northwest (rows 1..i, cols 1..j) submatrix.
inline std::vector<Generator> opposite_schubert_minors(const PatchChart& chart, const Permutation& v,
                                                       RichardsonOptions opts = {}) {
  int n = chart.n();
  RankMatrix r = rank_matrix(v, Orientation::northwest);
  std::vector<Generator> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int size = 1 + r(i, j);
      if (size > std::min(i, j)) continue;
      if (opts.prune && (r(i, j) == r(i - 1, j) + 1 || r(i, j) == r(i, j - 1) + 1)) continue;
      detail::emit_minors(chart, Tag::Kind::minor_nw, i, j, size, 1, i, out);
    }
  return out;
}

// Patch of X_u^v at wB: J_{w,u} + J^{w,v}.
inline GeneratorSet richardson_generators(const Permutation& w, const Permutation& u, const Permutation& v,
                                          RichardsonOptions opts = {}) {
  if (w.n() != u.n() || w.n() != v.n()) throw std::invalid_argument("permutations of different sizes");
  if (!bruhat_leq(v, w) || !bruhat_leq(w, u))
    throw precondition_error("wB is not in X_u^v: need v <= w <= u in Bruhat order (v = " + v.str() + ", w = " +
                             w.str() + ", u = " + u.str() + ")");
  PatchChart chart(w);
  GeneratorSet gs{chart, "richardson", schubert_minors(chart, u, opts), false};
  auto nw = opposite_schubert_minors(chart, v, opts);
  gs.gens.insert(gs.gens.end(), nw.begin(), nw.end());
  return gs;
}

namespace detail {

inline void require_peterson_schubert_pair(const Permutation& wQ, const Permutation& wP) {
  if (wQ.n() != wP.n()) throw std::invalid_argument("permutations of different sizes");
  if (!is_parabolic(wP)) throw precondition_error("w_P = " + wP.str() + " is not a parabolic longest element");
  if (!is_parabolic(wQ)) throw precondition_error("w_Q = " + wQ.str() + " is not a parabolic longest element");
  if (!bruhat_leq(wQ, wP))
    throw precondition_error("w_Q B is not in X_{w_P}: need w_Q <= w_P in Bruhat order (w_Q = " + wQ.str() +
                             ", w_P = " + wP.str() + ")");
}

// Rename the variables of a block chart into the global chart, shifting
// coordinates by offset.
inline Polynomial embed(const Polynomial& p, const RingPtr& target, int offset) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::uint64_t s = t.mono.support(); s; s &= s - 1) {
      auto k = static_cast<std::size_t>(__builtin_ctzll(s));
      const VarId& v = p.ring()->var(k);
      m.set(target->index(VarId::z(v.row + offset, v.col + offset)), t.mono[k]);
    }
    terms.push_back({m, t.coef});
  }
  return Polynomial(target, std::move(terms));
}

}  // namespace detail

// Patch of Pet_n ∩ X_{w_P} at w_Q B: Schubert minors plus Peterson generators.
inline GeneratorSet peterson_schubert_generators(const Permutation& wQ, const Permutation& wP) {
  detail::require_peterson_schubert_pair(wQ, wP);
  PatchChart chart(wQ);
  GeneratorSet gs{chart, "peterson-schubert", schubert_minors(chart, wP), false};
  auto pet = peterson_generators(wQ);
  gs.gens.insert(gs.gens.end(), pet.gens.begin(), pet.gens.end());
  return gs;
}

// The same ideal presented with block Peterson ideals of the w_Q^{(j)} in
// place of the Peterson ideal of w_Q.
inline GeneratorSet peterson_schubert_block_generators(const Permutation& wQ, const Permutation& wP) {
  detail::require_peterson_schubert_pair(wQ, wP);
  Composition c = *composition_of(wP);
  auto blocks = block_split(wQ, c);
  if (!blocks) throw consistency_error("w_Q <= w_P but w_Q is not block diagonal for the blocks of w_P");
  PatchChart chart(wQ);
  GeneratorSet gs{chart, "peterson-schubert", schubert_minors(chart, wP), false};
  for (std::size_t b = 0; b < blocks->size(); ++b) {
    int offset = c.block_start(b) - 1;
    auto local = peterson_generators((*blocks)[b]);
    for (auto g : local.gens) {
      g.tag.block = static_cast<int>(b) + 1;
      g.poly = detail::embed(g.poly, chart.ring(), offset);
      gs.gens.push_back(std::move(g));
    }
  }
  return gs;
}

}  // namespace patchideal
