#pragma once

#include <optional>
#include <vector>

#include "patchideal/polycore/polynomial.hpp"

namespace patchideal {

using WeightVector = std::vector<long>;

// An integer weight vector of rank r for each variable of a ring. The
// homogenizing variable always has weight zero.
class Grading {
 public:
  Grading(RingPtr ring, std::size_t rank, std::vector<WeightVector> chart_weights)
      : ring_(std::move(ring)), rank_(rank), weights_(std::move(chart_weights)) {
    if (weights_.size() != ring_->chart_size()) throw std::invalid_argument("grading must weight every chart variable");
    for (const auto& w : weights_)
      if (w.size() != rank_) throw std::invalid_argument("weight vector has wrong rank");
    weights_.emplace_back(rank_, 0);
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const WeightVector& weight(std::size_t var) const { return weights_.at(var); }

  WeightVector degree(const Monomial& m) const {
    WeightVector d(rank_, 0);
    for (std::uint64_t s = m.support(); s; s &= s - 1) {
      auto k = static_cast<std::size_t>(__builtin_ctzll(s));
      for (std::size_t r = 0; r < rank_; ++r) d[r] += static_cast<long>(m[k]) * weights_[k][r];
    }
    return d;
  }

 private:
  RingPtr ring_;
  std::size_t rank_;
  std::vector<WeightVector> weights_;
};

// The common weight of every term, or nullopt when p is inhomogeneous.
inline std::optional<WeightVector> grade_degree(const Polynomial& p, const Grading& g) {
  if (p.is_zero()) throw degenerate_input_error("degree of the zero polynomial");
  require_same_ring(p.ring(), g.ring());
  WeightVector d = g.degree(p.terms().front().mono);
  for (const auto& t : p.terms())
    if (g.degree(t.mono) != d) return std::nullopt;
  return d;
}

}  // namespace patchideal
