#pragma once

#include <optional>
#include <string>
#include <vector>

#include "patchideal/patches/chart.hpp"

namespace patchideal {

// Square rational matrix, indexed [row-1][col-1].
using RationalMatrix = std::vector<std::vector<Rational>>;

// Ones on the main superdiagonal.
inline RationalMatrix regular_nilpotent(int n) {
  RationalMatrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), 0));
  for (int i = 1; i < n; ++i) m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i)] = 1;
  return m;
}

// Nilpotent matrix with Jordan blocks of the given sizes down the diagonal,
// each block with ones on its superdiagonal.
inline RationalMatrix nilpotent_of_jordan_type(const std::vector<int>& lambda) {
  int n = 0;
  for (int p : lambda) {
    if (p < 1) throw std::invalid_argument("Jordan block sizes must be positive");
    n += p;
  }
  RationalMatrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), 0));
  int start = 0;
  for (int p : lambda) {
    for (int a = 0; a + 1 < p; ++a) m[static_cast<std::size_t>(start + a)][static_cast<std::size_t>(start + a + 1)] = 1;
    start += p;
  }
  return m;
}

// Hess(H, h) = { F : H F_i in F_{h(i)} }.
struct HessenbergSpec {
  RationalMatrix H;
  std::vector<int> h;  // h[i-1] = h(i)

  int n() const { return static_cast<int>(H.size()); }
  int hfun(int i) const { return h.at(static_cast<std::size_t>(i - 1)); }

  // H = N, h(i) = i + 1 (capped at n).
  static HessenbergSpec peterson(int n) {
    HessenbergSpec s{regular_nilpotent(n), {}};
    for (int i = 1; i <= n; ++i) s.h.push_back(std::min(i + 1, n));
    return s;
  }

  void validate() const {
    int m = n();
    if (m < 1) throw std::invalid_argument("Hessenberg matrix is empty");
    for (const auto& row : H)
      if (static_cast<int>(row.size()) != m) throw std::invalid_argument("Hessenberg matrix is not square");
    if (static_cast<int>(h.size()) != m)
      throw std::invalid_argument("Hessenberg function has " + std::to_string(h.size()) + " values, expected " +
                                  std::to_string(m));
    for (int i = 1; i <= m; ++i) {
      if (hfun(i) > m) throw precondition_error("h(" + std::to_string(i) + ") exceeds n");
      if (hfun(i) < i)
        throw precondition_error("not a Hessenberg function: h(i) >= i fails at i = " + std::to_string(i) +
                                 " (Hess(H,h) is empty)");
      if (i < m && hfun(i + 1) < hfun(i))
        throw precondition_error("not a Hessenberg function: h(i+1) >= h(i) fails at i = " + std::to_string(i));
    }
  }

  bool is_peterson() const {
    HessenbergSpec p = peterson(n());
    return H == p.H && h == p.h;
  }
};

// Why wB is not in Hess(H, h), or nullopt when it is: the first column c <= i
// with H e_{w(c)} outside F_{h(i)} = span(e_{w(1)}, ..., e_{w(h(i))}).
inline std::optional<std::string> hessenberg_membership_failure(const HessenbergSpec& spec, const Permutation& w) {
  int n = spec.n();
  if (w.n() != n) throw std::invalid_argument("permutation size does not match the Hessenberg matrix");
  for (int i = 1; i <= n; ++i) {
    int hi = spec.hfun(i);
    std::vector<bool> in(static_cast<std::size_t>(n + 1), false);
    for (int m = 1; m <= hi; ++m) in[static_cast<std::size_t>(w(m))] = true;
    for (int c = 1; c <= i; ++c)
      for (int r = 1; r <= n; ++r)
        if (spec.H[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(w(c) - 1)] != 0 &&
            !in[static_cast<std::size_t>(r)])
          return "H*e_" + std::to_string(w(c)) + " is not in F_" + std::to_string(hi) + " = span(e_w(1..." +
                 std::to_string(hi) + ")) although e_" + std::to_string(w(c)) + " lies in F_" + std::to_string(i) +
                 " (condition H F_" + std::to_string(i) + " in F_h(" + std::to_string(i) + ") fails for w = " +
                 w.str() + ")";
  }
  return std::nullopt;
}

// Solution alpha_{j,l} of H Z_j = sum_l alpha_{j,l} Z_l on rows w(1..h(j)).
struct AlphaTable {
  // values[j-1][l-1]; empty for columns without a condition (h(j) = n).
  std::vector<std::vector<Polynomial>> values;

  const Polynomial& at(int j, int l) const {
    return values.at(static_cast<std::size_t>(j - 1)).at(static_cast<std::size_t>(l - 1));
  }
};

namespace detail {

inline std::vector<Polynomial> h_times_column(const PatchChart& chart, const RationalMatrix& H, int j) {
  int n = chart.n();
  std::vector<Polynomial> out;
  for (int k = 1; k <= n; ++k) {
    Polynomial s(chart.ring());
    for (int c = 1; c <= n; ++c) {
      const Rational& a = H[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(c - 1)];
      if (a != 0) s += a * chart.entry(c, j);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace detail

inline AlphaTable alpha_table(const PatchChart& chart, const HessenbergSpec& spec) {
  int n = chart.n();
  const Permutation& w = chart.w();
  AlphaTable t;
  t.values.resize(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    int hj = spec.hfun(j);
    if (hj >= n) continue;
    auto hz = detail::h_times_column(chart, spec.H, j);
    auto& a = t.values[static_cast<std::size_t>(j - 1)];
    for (int m = 1; m <= hj; ++m) {
      int row = w(m);
      Polynomial v = hz[static_cast<std::size_t>(row - 1)];
      for (int l = 1; l < m; ++l) v -= a[static_cast<std::size_t>(l - 1)] * chart.entry(row, l);
      if (chart.kind(row, m) != PatchChart::Entry::one) throw consistency_error("alpha subsystem is not unitriangular");
      a.push_back(std::move(v));
    }
  }
  return t;
}

// Residuals sum_l alpha_{j,l} z_{k,l} - (H Z_j)_k for rows k outside w(1..h(j)),
// ordered by column j then row k; zero residuals are dropped.
inline std::vector<Generator> residual_generators(const PatchChart& chart, const HessenbergSpec& spec,
                                                  const AlphaTable& alpha) {
  int n = chart.n();
  const Permutation& w = chart.w();
  std::vector<Generator> out;
  for (int j = 1; j <= n; ++j) {
    int hj = spec.hfun(j);
    if (hj >= n) continue;
    auto hz = detail::h_times_column(chart, spec.H, j);
    std::vector<bool> solved(static_cast<std::size_t>(n + 1), false);
    for (int m = 1; m <= hj; ++m) solved[static_cast<std::size_t>(w(m))] = true;
    for (int k = 1; k <= n; ++k) {
      if (solved[static_cast<std::size_t>(k)]) continue;
      Polynomial g = -hz[static_cast<std::size_t>(k - 1)];
      for (int l = 1; l <= hj; ++l) g += alpha.at(j, l) * chart.entry(k, l);
      if (g.is_zero()) continue;
      out.push_back({Tag::residual(k, j), g.normalized()});
    }
  }
  return out;
}

struct HessenbergOptions {
  // Reject permutations whose point wB is not on the variety. Turning this
  // off allows charts around points off the variety.
  bool requireFixedPoint = true;
};

inline GeneratorSet hessenberg_generators(const HessenbergSpec& spec, const Permutation& w,
                                          HessenbergOptions opts = {}) {
  spec.validate();
  if (opts.requireFixedPoint)
    if (auto why = hessenberg_membership_failure(spec, w)) throw precondition_error("wB is not in Hess(H,h): " + *why);
  PatchChart chart(w);
  GeneratorSet gs{chart, "hessenberg", residual_generators(chart, spec, alpha_table(chart, spec)), !spec.is_peterson()};
  return gs;
}

inline GeneratorSet peterson_generators(const Permutation& w) {
  HessenbergSpec spec = HessenbergSpec::peterson(w.n());
  if (!is_parabolic(w)) {
    auto why = hessenberg_membership_failure(spec, w);
    throw precondition_error("w = " + w.str() + " is not a parabolic w_P, so wB is not in Pet_n" +
                             (why ? ": " + *why : std::string()));
  }
  PatchChart chart(w);
  return GeneratorSet{chart, "peterson", residual_generators(chart, spec, alpha_table(chart, spec)), false};
}

}  // namespace patchideal
