#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <numeric>
#include <string>
#include <vector>

#include "patchideal/polycore/ring.hpp"

namespace patchideal {

// A monomial order on the variables of one ring. Precedence is a total order
// on variable indices, stored from the smallest variable to the largest.
class TermOrder {
 public:
  enum class Scheme : std::uint8_t { lex, grevlex, t_first_then_grevlex, weighted };

  TermOrder(Scheme scheme, std::vector<std::uint8_t> ascending, std::size_t homog)
      : scheme_(scheme), ascending_(std::move(ascending)), homog_(homog) {
    std::vector<std::uint8_t> check = ascending_;
    std::sort(check.begin(), check.end());
    for (std::size_t k = 0; k < check.size(); ++k)
      if (check[k] != k) throw std::invalid_argument("variable precedence is not a permutation");
  }

  // Default precedence: t below every chart variable, chart variables in
  // column-first order.
  static std::vector<std::uint8_t> default_precedence(const Ring& ring) {
    std::vector<std::uint8_t> asc;
    asc.reserve(ring.size());
    asc.push_back(static_cast<std::uint8_t>(ring.homog_index()));
    for (std::size_t k = 0; k < ring.chart_size(); ++k) asc.push_back(static_cast<std::uint8_t>(k));
    return asc;
  }

  static TermOrder grevlex(const Ring& ring) {
    return {Scheme::grevlex, default_precedence(ring), ring.homog_index()};
  }
  static TermOrder lex(const Ring& ring) { return {Scheme::lex, default_precedence(ring), ring.homog_index()}; }
  static TermOrder t_first(const Ring& ring) {
    return {Scheme::t_first_then_grevlex, default_precedence(ring), ring.homog_index()};
  }
  // Larger weight first, ties broken by grevlex. Weights are indexed by ring
  // position and must be positive on the chart variables.
  static TermOrder weighted(const Ring& ring, std::vector<std::int64_t> weights) {
    if (weights.size() != ring.size()) throw std::invalid_argument("one weight per ring variable is required");
    for (std::size_t k = 0; k < ring.chart_size(); ++k)
      if (weights[k] <= 0) throw std::invalid_argument("weights of a global order must be positive");
    TermOrder o{Scheme::weighted, default_precedence(ring), ring.homog_index()};
    o.weights_ = std::move(weights);
    return o;
  }

  Scheme scheme() const { return scheme_; }
  const std::vector<std::uint8_t>& precedence() const { return ascending_; }

  // <0, 0, >0 as a is smaller than, equal to, or larger than b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (scheme_) {
      case Scheme::lex:
        for (auto it = ascending_.rbegin(); it != ascending_.rend(); ++it)
          if (a[*it] != b[*it]) return a[*it] > b[*it] ? 1 : -1;
        return 0;
      case Scheme::grevlex:
        return grevlex_compare(a, b, a.degree(), b.degree(), ascending_.size());
      case Scheme::t_first_then_grevlex: {
        unsigned ta = a[homog_], tb = b[homog_];
        if (ta != tb) return ta > tb ? 1 : -1;
        return grevlex_compare(a, b, a.degree() - ta, b.degree() - tb, ascending_.size());
      }
      case Scheme::weighted: {
        std::int64_t wa = weight(a), wb = weight(b);
        if (wa != wb) return wa > wb ? 1 : -1;
        return grevlex_compare(a, b, a.degree(), b.degree(), ascending_.size());
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const {
    switch (scheme_) {
      case Scheme::lex: return "lex";
      case Scheme::grevlex: return "grevlex";
      case Scheme::t_first_then_grevlex: return "tFirstThenGrevlex";
      case Scheme::weighted: return "weighted";
    }
    return "?";
  }

  friend bool operator==(const TermOrder& a, const TermOrder& b) {
    return a.scheme_ == b.scheme_ && a.ascending_ == b.ascending_ && a.homog_ == b.homog_ && a.weights_ == b.weights_;
  }

 private:
  std::int64_t weight(const Monomial& m) const {
    std::int64_t s = 0;
    for (std::uint64_t b = m.support(); b; b &= b - 1) {
      auto k = static_cast<std::size_t>(__builtin_ctzll(b));
      s += weights_[k] * m[k];
    }
    return s;
  }

  int grevlex_compare(const Monomial& a, const Monomial& b, unsigned da, unsigned db, std::size_t nvars) const {
    if (da != db) return da > db ? 1 : -1;
    if (a == b) return 0;
    for (std::size_t k = 0; k < nvars; ++k) {
      auto v = ascending_[k];
      if (scheme_ == Scheme::t_first_then_grevlex && v == homog_) continue;
      if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    }
    return 0;
  }

  Scheme scheme_;
  std::vector<std::uint8_t> ascending_;
  std::size_t homog_;
  std::vector<std::int64_t> weights_;
};

}  // namespace patchideal
