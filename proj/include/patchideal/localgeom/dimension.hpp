#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "patchideal/localgeom/local.hpp"
#include "patchideal/patches/hessenberg.hpp"

namespace patchideal {

// A Hessenberg matrix supported on the first superdiagonal is rescaled by
// s(t) = diag(t, t^2, ..., t^n), so s(t) acts on Hess(H, h). The variety is
// complete, hence it is the disjoint union of the attracting cells
// { F : lim_{t->0} s(t) F = uB } over its permutation flags uB. In the chart
// at u the coordinate z_{ij} has weight i - u(j) and the cell is cut out by
// the coordinates of negative weight.
inline bool rescaled_by_torus(const HessenbergSpec& spec) {
  int n = spec.n();
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      if (c != r + 1 && spec.H[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] != 0) return false;
  return true;
}

inline std::vector<Permutation> hessenberg_fixed_points(const HessenbergSpec& spec) {
  spec.validate();
  std::vector<int> one(static_cast<std::size_t>(spec.n()));
  std::iota(one.begin(), one.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation u(one);
    if (!hessenberg_membership_failure(spec, u)) out.push_back(u);
  } while (std::next_permutation(one.begin(), one.end()));
  return out;
}

struct CellDimension {
  Permutation point;
  std::size_t dim = 0;
};

inline std::size_t attracting_cell_dimension(const HessenbergSpec& spec, const Permutation& u) {
  if (!rescaled_by_torus(spec)) throw precondition_error("the Hessenberg matrix is not supported on the superdiagonal");
  GeneratorSet G = hessenberg_generators(spec, u);
  const RingPtr& ring = G.chart.ring();
  std::vector<Polynomial> gens = G.polys();
  std::vector<std::int64_t> weights(ring->size(), 1);
  auto pos = G.chart.free_positions();
  for (std::size_t k = 0; k < pos.size(); ++k) {
    int wt = pos[k].first - u(pos[k].second);
    if (wt < 0) gens.push_back(var(ring, pos[k].first, pos[k].second));
    else weights[k] = 2 * wt - 1;
  }
  return pointed_krull_dimension(Ideal(ring, gens), TermOrder::weighted(*ring, weights));
}

inline std::vector<CellDimension> attracting_cells(const HessenbergSpec& spec) {
  std::vector<CellDimension> out;
  for (const auto& u : hessenberg_fixed_points(spec)) out.push_back({u, attracting_cell_dimension(spec, u)});
  return out;
}

inline std::size_t hessenberg_dimension(const HessenbergSpec& spec) {
  std::size_t d = 0;
  for (const auto& c : attracting_cells(spec)) d = std::max(d, c.dim);
  return d;
}

struct DimensionCertificate {
  std::size_t lower = 0;  // chart size minus generator count
  std::size_t upper = 0;  // dimension of the whole variety
  bool exact() const { return lower == upper; }
};

// varietyDim, when given, is taken as hessenberg_dimension(spec).
inline DimensionCertificate patch_dimension_bounds(const HessenbergSpec& spec, const Permutation& w,
                                                   std::optional<std::size_t> varietyDim = std::nullopt) {
  GeneratorSet G = hessenberg_generators(spec, w);
  std::size_t nVars = G.chart.ring()->chart_size(), c = G.polys().size();
  return {nVars > c ? nVars - c : 0, varietyDim ? *varietyDim : hessenberg_dimension(spec)};
}

// Krull dimension of the patch at a permutation flag wB on Hess(H, h): the
// bounds above when they meet, a Groebner basis otherwise.
inline std::size_t patch_dimension(const HessenbergSpec& spec, const Permutation& w,
                                   std::optional<std::size_t> varietyDim = std::nullopt) {
  if (rescaled_by_torus(spec)) {
    DimensionCertificate b = patch_dimension_bounds(spec, w, varietyDim);
    if (b.exact()) return b.lower;
  }
  GeneratorSet G = hessenberg_generators(spec, w);
  auto L = eliminate_linear_variables(G.polys());
  const RingPtr& ring = G.chart.ring();
  return pointed_krull_dimension(Ideal(ring, L.gens), TermOrder::grevlex(*ring)) - L.eliminated;
}

}  // namespace patchideal
