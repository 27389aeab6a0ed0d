#pragma once

#include <map>
#include <string>
#include <vector>

#include "patchideal/patches/hessenberg.hpp"

namespace patchideal {

// A point b of U_P: block diagonal, each block unipotent upper triangular
// with constant superdiagonals. params[b][d-1] is the d-th superdiagonal
// of block b.
class GroupPoint {
 public:
  GroupPoint() = default;
  GroupPoint(Composition c, std::vector<std::vector<Rational>> params) : c_(std::move(c)), q_(std::move(params)) {
    if (q_.size() != c_.size()) throw std::invalid_argument("one parameter list per block is required");
    for (std::size_t b = 0; b < q_.size(); ++b)
      if (static_cast<int>(q_[b].size()) != c_.parts()[b] - 1)
        throw std::invalid_argument("block " + std::to_string(b + 1) + " of size " + std::to_string(c_.parts()[b]) +
                                    " needs " + std::to_string(c_.parts()[b] - 1) + " parameters");
  }

  static GroupPoint identity(const Composition& c) {
    std::vector<std::vector<Rational>> q;
    for (int p : c.parts()) q.emplace_back(static_cast<std::size_t>(p - 1), Rational(0));
    return GroupPoint(c, std::move(q));
  }

  // Parameters listed block after block; n - k values in total.
  static GroupPoint from_flat(const Composition& c, const std::vector<Rational>& flat) {
    std::size_t need = static_cast<std::size_t>(c.n()) - c.size();
    if (flat.size() != need)
      throw std::invalid_argument("expected " + std::to_string(need) + " group parameters for composition " + c.str() +
                                  ", got " + std::to_string(flat.size()));
    std::vector<std::vector<Rational>> q;
    std::size_t at = 0;
    for (int p : c.parts()) {
      q.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(at), flat.begin() + static_cast<std::ptrdiff_t>(at + p - 1));
      at += static_cast<std::size_t>(p - 1);
    }
    return GroupPoint(c, std::move(q));
  }

  const Composition& composition() const { return c_; }
  const std::vector<std::vector<Rational>>& params() const { return q_; }

  std::vector<Rational> flat() const {
    std::vector<Rational> out;
    for (const auto& b : q_) out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  bool is_identity() const {
    for (const auto& b : q_)
      for (const auto& v : b)
        if (v != 0) return false;
    return true;
  }

  // Entry b_{ik}, 1-based.
  Rational entry(int i, int k) const {
    if (i == k) return 1;
    if (k < i) return 0;
    int start = 1;
    for (std::size_t b = 0; b < q_.size(); ++b) {
      int end = start + c_.parts()[b] - 1;
      if (i >= start && i <= end) return k <= end ? q_[b][static_cast<std::size_t>(k - i - 1)] : Rational(0);
      start = end + 1;
    }
    return 0;
  }

  RationalMatrix matrix() const {
    int n = c_.n();
    RationalMatrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), 0));
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k) m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] = entry(i, k);
    return m;
  }

  // Group inverse; each block is 1 + sum q_d S^d with S the shift, so the
  // inverse is again of this form.
  GroupPoint inverse() const {
    std::vector<std::vector<Rational>> inv;
    for (const auto& q : q_) {
      std::vector<Rational> c(q.size() + 1, 0);
      c[0] = 1;
      for (std::size_t d = 1; d <= q.size(); ++d)
        for (std::size_t e = 1; e <= d; ++e) c[d] -= q[e - 1] * c[d - e];
      inv.emplace_back(c.begin() + 1, c.end());
    }
    return GroupPoint(c_, std::move(inv));
  }

  friend GroupPoint operator*(const GroupPoint& a, const GroupPoint& b) {
    if (!(a.c_ == b.c_)) throw std::invalid_argument("group points of different compositions");
    std::vector<std::vector<Rational>> out;
    for (std::size_t k = 0; k < a.q_.size(); ++k) {
      const auto& x = a.q_[k];
      const auto& y = b.q_[k];
      std::vector<Rational> r(x.size(), 0);
      for (std::size_t d = 1; d <= x.size(); ++d) {
        r[d - 1] = x[d - 1] + y[d - 1];
        for (std::size_t e = 1; e < d; ++e) r[d - 1] += x[e - 1] * y[d - e - 1];
      }
      out.push_back(std::move(r));
    }
    return GroupPoint(a.c_, std::move(out));
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t b = 0; b < q_.size(); ++b) {
      s += b ? ";" : "";
      for (std::size_t d = 0; d < q_[b].size(); ++d) s += (d ? "," : "") + to_string(q_[b][d]);
    }
    return s + "]";
  }

 private:
  Composition c_;
  std::vector<std::vector<Rational>> q_;
};

// Substitution Z -> b Z on the chart of w_P: z_{ij} -> z_{ij} + sum_{k>i} b_{ik} Z_{kj}.
// It keeps the chart's pinned entries, and moves the origin to (b w_P)B.
inline std::map<VarId, Polynomial> recenter_map(const PatchChart& chart, const GroupPoint& b) {
  std::map<VarId, Polynomial> sub;
  int n = chart.n();
  for (auto [i, j] : chart.free_positions()) {
    Polynomial img = var(chart.ring(), i, j);
    for (int k = i + 1; k <= n; ++k) {
      Rational c = b.entry(i, k);
      if (c != 0) img += c * chart.entry(k, j);
    }
    sub.emplace(VarId::z(i, j), std::move(img));
  }
  return sub;
}

inline GeneratorSet recenter(const GeneratorSet& G, const GroupPoint& b) {
  auto c = composition_of(G.chart.w());
  if (!c) throw precondition_error("recentering needs a chart at a parabolic w_P; got w = " + G.chart.w().str());
  if (!(*c == b.composition()))
    throw precondition_error("group point composition " + b.composition().str() + " does not match w_P composition " +
                             c->str());
  auto sub = recenter_map(G.chart, b);
  GeneratorSet out{G.chart, G.family, {}, G.setTheoretic};
  for (const auto& g : G.gens) {
    Tag t = g.tag;
    t.recentered = true;
    out.gens.push_back({t, substitute_affine(g.poly, sub).normalized()});
  }
  return out;
}

}  // namespace patchideal
