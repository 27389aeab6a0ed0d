#pragma once

#include <string>
#include <utility>
#include <vector>

#include "patchideal/groebner/groebner.hpp"
#include "patchideal/polycore/polynomial.hpp"
#include "patchideal/weyl/permutation.hpp"

namespace patchideal {

// Coordinates of the affine patch around wB: the generic matrix Z^(w) with
// 1 at (w(j), j), 0 at (i, j) for j > w^{-1}(i), and a free variable z_{ij}
// elsewhere.
class PatchChart {
 public:
  enum class Entry { zero, one, free };

  PatchChart() = default;
  explicit PatchChart(Permutation w) : w_(std::move(w)), winv_(w_.inverse()) {
    std::vector<std::pair<int, int>> pos;
    for (int i = 1; i <= n(); ++i)
      for (int j = 1; j < winv_(i); ++j) pos.emplace_back(i, j);
    ring_ = make_ring(std::move(pos));
  }

  int n() const { return w_.n(); }
  const Permutation& w() const { return w_; }
  const RingPtr& ring() const { return ring_; }

  Entry kind(int i, int j) const {
    if (w_(j) == i) return Entry::one;
    return j < winv_(i) ? Entry::free : Entry::zero;
  }

  Polynomial entry(int i, int j) const {
    if (i < 1 || i > n() || j < 1 || j > n()) return Polynomial(ring_);
    switch (kind(i, j)) {
      case Entry::zero: return Polynomial(ring_);
      case Entry::one: return Polynomial::constant(ring_, 1);
      case Entry::free: return var(ring_, i, j);
    }
    return Polynomial(ring_);
  }

  std::vector<std::pair<int, int>> free_positions() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t k = 0; k < ring_->chart_size(); ++k) out.emplace_back(ring_->var(k).row, ring_->var(k).col);
    return out;
  }

  friend bool operator==(const PatchChart& a, const PatchChart& b) { return a.w_ == b.w_; }

 private:
  Permutation w_;
  Permutation winv_;
  RingPtr ring_;
};

inline PatchChart make_chart(const Permutation& w) { return PatchChart(w); }

// Provenance of a generator.
struct Tag {
  enum class Kind { residual, minor_sw, minor_nw };

  Kind kind = Kind::residual;
  int k = 0, j = 0;          // residual: row k of column j's equation; minors: corner (k, j) = (i, j)
  int size = 0;              // minors only
  std::vector<int> rows, cols;
  int block = 0;             // 1-based block of a block-embedded generator, 0 otherwise
  bool recentered = false;

  static Tag residual(int k, int j) { return {Kind::residual, k, j, 0, {}, {}, 0, false}; }

  std::string str() const {
    std::string s;
    auto list = [](const std::vector<int>& v) {
      std::string o;
      for (std::size_t a = 0; a < v.size(); ++a) o += (a ? "," : "") + std::to_string(v[a]);
      return o;
    };
    switch (kind) {
      case Kind::residual: s = "g[" + std::to_string(k) + "][" + std::to_string(j) + "]"; break;
      case Kind::minor_sw:
      case Kind::minor_nw:
        s = std::string(kind == Kind::minor_sw ? "sw" : "nw") + "[" + std::to_string(k) + "][" + std::to_string(j) +
            "]:" + std::to_string(size) + "{" + list(rows) + "|" + list(cols) + "}";
        break;
    }
    if (block) s = "block" + std::to_string(block) + ":" + s;
    if (recentered) s = "recentered(" + s + ")";
    return s;
  }
};

struct Generator {
  Tag tag;
  Polynomial poly;
};

// A patch ideal presented by tagged generators on one chart.
struct GeneratorSet {
  PatchChart chart;
  std::string family;
  std::vector<Generator> gens;
  // Generators are only known to cut out the variety up to radical.
  bool setTheoretic = false;

  std::size_t size() const { return gens.size(); }

  std::vector<Polynomial> polys() const {
    std::vector<Polynomial> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(g.poly);
    return out;
  }

  Ideal ideal() const { return Ideal(chart.ring(), polys()); }
};

}  // namespace patchideal
