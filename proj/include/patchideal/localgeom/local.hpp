#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "patchideal/groebner/hilbert.hpp"
#include "patchideal/patches/chart.hpp"
#include "patchideal/polycore/grading.hpp"
#include "patchideal/polycore/univariate.hpp"

namespace patchideal {

// Rank of a rational matrix by fraction-free (Bareiss) elimination after
// clearing denominators row by row.
inline std::size_t matrix_rank(const std::vector<std::vector<Rational>>& m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m.front().size();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer den = 1;
    for (const auto& v : m[r]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m[r][c].get_num() * (den / m[r][c].get_den());
  }
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        Integer v = a[rank][c] * a[r][k] - a[r][c] * a[rank][k];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[r][k] = std::move(v);
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

struct JacobianReport {
  std::vector<std::vector<Rational>> matrix;  // generators x chart variables
  std::size_t rank = 0;
  std::size_t nVars = 0;
  bool smooth = false;  // rank == nVars - expectedDim
};

using PointAssignment = std::map<VarId, Rational>;

inline JacobianReport jacobian_at(const GeneratorSet& G, const PointAssignment& point, std::size_t expectedDim) {
  const RingPtr& ring = G.chart.ring();
  std::size_t m = ring->chart_size();
  std::vector<Rational> p(ring->size(), 0);
  for (std::size_t k = 0; k < m; ++k) {
    auto it = point.find(ring->var(k));
    if (it == point.end()) throw std::invalid_argument("point does not assign " + ring->var(k).name());
    p[k] = it->second;
  }
  JacobianReport rep;
  rep.nVars = m;
  for (const auto& g : G.gens) {
    std::vector<Rational> row;
    for (std::size_t k = 0; k < m; ++k) row.push_back(g.poly.derivative(k).evaluate(p));
    rep.matrix.push_back(std::move(row));
  }
  rep.rank = matrix_rank(rep.matrix);
  rep.smooth = expectedDim <= m && rep.rank == m - expectedDim;
  return rep;
}

inline PointAssignment origin(const PatchChart& chart) {
  PointAssignment p;
  for (std::size_t k = 0; k < chart.ring()->chart_size(); ++k) p[chart.ring()->var(k)] = 0;
  return p;
}

inline void require_origin_on_scheme(const GeneratorSet& G) {
  for (const auto& g : G.gens)
    if (g.poly.constant_term() != 0)
      throw precondition_error("the origin is not on the scheme: generator " + g.tag.str() +
                               " has nonzero constant term " + to_string(g.poly.constant_term()));
}

// deg z_{ij} = i - w(j).
inline Grading coarse_grading(const PatchChart& chart) {
  std::vector<WeightVector> w;
  for (auto [i, j] : chart.free_positions()) w.push_back({static_cast<long>(i - chart.w()(j))});
  return Grading(chart.ring(), 1, std::move(w));
}

// deg z_{ij} = e_i - e_{w(j)} in Z^n.
inline Grading torus_grading(const PatchChart& chart) {
  std::vector<WeightVector> w;
  std::size_t n = static_cast<std::size_t>(chart.n());
  for (auto [i, j] : chart.free_positions()) {
    WeightVector v(n, 0);
    v[static_cast<std::size_t>(i - 1)] += 1;
    v[static_cast<std::size_t>(chart.w()(j) - 1)] -= 1;
    w.push_back(std::move(v));
  }
  return Grading(chart.ring(), n, std::move(w));
}

namespace detail {

// Positive weights under which every generator is quasi-homogeneous, from
// the coarse grading or its negative.
inline std::optional<std::vector<std::int64_t>> positive_weights(const GeneratorSet& G) {
  Grading g = coarse_grading(G.chart);
  for (const auto& gen : G.gens)
    if (!gen.poly.is_zero() && !grade_degree(gen.poly, g)) return std::nullopt;
  const RingPtr& ring = G.chart.ring();
  for (int sign : {1, -1}) {
    std::vector<std::int64_t> w(ring->size(), 0);
    bool ok = true;
    for (std::size_t k = 0; k < ring->chart_size() && ok; ++k) {
      w[k] = sign * g.weight(k).front();
      ok = w[k] > 0;
    }
    if (ok) return w;
  }
  return std::nullopt;
}

}  // namespace detail

// Tangent cone at the origin, as the normalized reduced Groebner basis of the
// cone ideal under the default order. When the generators are quasi-homogeneous
// for positive weights w, the cone is the initial ideal for the weight
// 2w - deg, which picks lowest forms. Otherwise the ideal is saturated (via an
// affine basis), homogenized by t, and a basis under an order preferring high
// powers of t yields the lowest forms after setting t = 1.
// automatic: weighted initial ideal when positive weights exist, else saturate.
// saturate: homogenize an affine Groebner basis. literal: homogenize the
// generators as given (slow, kept for cross-checks).
enum class ConeMethod { automatic, saturate, literal };

inline std::vector<Polynomial> tangent_cone(const GeneratorSet& G, ConeMethod method = ConeMethod::automatic) {
  require_origin_on_scheme(G);
  const RingPtr& ring = G.chart.ring();
  std::vector<Polynomial> gens;
  for (const auto& g : G.gens)
    if (!g.poly.is_zero()) gens.push_back(g.poly);
  if (gens.empty()) return {};
  std::vector<Polynomial> basis;
  auto w = method == ConeMethod::automatic ? detail::positive_weights(G) : std::nullopt;
  if (w) {
    for (std::size_t k = 0; k < ring->chart_size(); ++k) (*w)[k] = 2 * (*w)[k] - 1;
    basis = reduced_groebner_basis(ring, gens, TermOrder::weighted(*ring, std::move(*w)));
  } else {
    std::vector<Polynomial> hom;
    if (method == ConeMethod::literal) {
      for (const auto& g : gens) hom.push_back(g.homogenize());
    } else {
      for (const auto& g : reduced_groebner_basis(ring, gens, TermOrder::grevlex(*ring))) hom.push_back(g.homogenize());
    }
    for (const auto& g : reduced_groebner_basis(ring, hom, TermOrder::t_first(*ring))) basis.push_back(g.dehomogenize());
  }
  std::vector<Polynomial> low;
  for (const auto& g : basis)
    if (!g.is_zero()) low.push_back(g.lowest_form());
  std::vector<Polynomial> out;
  for (const auto& g : reduced_groebner_basis(ring, low, TermOrder::grevlex(*ring))) out.push_back(g.normalized());
  return out;
}

// Exponents d of the factors (1 - chi^d) of the closed product formula.
inline std::vector<int> k_polynomial_factors(const Permutation& wP) {
  if (!is_parabolic(wP)) throw precondition_error("w_P = " + wP.str() + " is not a parabolic longest element");
  int n = wP.n();
  std::vector<int> out;
  for (int j = 1; j <= n - 2; ++j)
    for (int k = 1; k <= n; ++k) {
      bool excluded = false;
      for (int i = 1; i <= j + 1; ++i) excluded = excluded || wP(i) == k;
      if (!excluded) out.push_back(k + 1 - wP(j));
    }
  return out;
}

inline LaurentPoly k_polynomial_formula(const Permutation& wP) { return expand_factors(k_polynomial_factors(wP)); }

// Generator degrees under g, in generator order.
inline std::vector<int> generator_degrees(const GeneratorSet& G, const Grading& g) {
  if (g.rank() != 1) throw std::invalid_argument("K-polynomial from degrees needs a rank-one grading");
  std::vector<int> out;
  for (const auto& gen : G.gens) {
    auto d = grade_degree(gen.poly, g);
    if (!d) throw precondition_error("generator " + gen.tag.str() + " is not homogeneous for the grading");
    out.push_back(static_cast<int>(d->front()));
  }
  return out;
}

inline LaurentPoly k_polynomial_from_degrees(const GeneratorSet& G, const Grading& g) {
  return expand_factors(generator_degrees(G, g));
}

struct LocalReport {
  std::string point;
  bool smooth = false;
  std::size_t jacobianRank = 0;
  std::size_t codimension = 0;
  std::vector<Polynomial> cone;
  HilbertData hilbert;
  std::optional<LaurentPoly> k;
  std::optional<std::vector<int>> kFactors;
  bool setTheoretic = false;
  std::vector<std::string> diagnostics;

  const IntPoly& h() const { return hilbert.h; }
  std::int64_t multiplicity() const { return hilbert.multiplicity(); }
  bool cone_is_linear() const {
    return std::all_of(cone.begin(), cone.end(), [](const Polynomial& p) { return p.total_degree() == 1; });
  }
};

// Local invariants at the origin of G's chart.
inline LocalReport local_report(const GeneratorSet& G, std::size_t expectedDim, std::string label = {}) {
  LocalReport rep;
  rep.point = label.empty() ? G.chart.w().str() : std::move(label);
  rep.setTheoretic = G.setTheoretic;
  auto jac = jacobian_at(G, origin(G.chart), expectedDim);
  rep.smooth = jac.smooth;
  rep.jacobianRank = jac.rank;
  rep.codimension = G.chart.ring()->chart_size() - std::min(expectedDim, G.chart.ring()->chart_size());
  rep.cone = tangent_cone(G);
  rep.hilbert = hilbert_of_quotient(Ideal(G.chart.ring(), rep.cone), expectedDim);
  for (const auto& d : rep.hilbert.diagnostics) rep.diagnostics.push_back(d);
  if (G.setTheoretic) rep.diagnostics.push_back("set-theoretic generators: smoothness is relative to the given equations");
  for (auto c : rep.hilbert.h.coeffs())
    if (c < 0) {
      rep.diagnostics.push_back("FINDING: negative h-polynomial coefficient (h = " + rep.hilbert.h.str() + ")");
      break;
    }
  if (!G.setTheoretic && rep.hilbert.dimension == expectedDim) {
    bool hOne = rep.hilbert.h == IntPoly::one();
    if (rep.smooth != hOne)
      throw consistency_error("Jacobian verdict and h-polynomial disagree at " + rep.point + " (rank " +
                              std::to_string(jac.rank) + ", h = " + rep.hilbert.h.str() + ")");
  }
  bool graded = G.family == "peterson" &&
                std::none_of(G.gens.begin(), G.gens.end(), [](const Generator& g) { return g.tag.recentered; });
  if (graded) {
    auto degs = generator_degrees(G, coarse_grading(G.chart));
    rep.kFactors = degs;
    rep.k = expand_factors(degs);
  }
  return rep;
}

}  // namespace patchideal
