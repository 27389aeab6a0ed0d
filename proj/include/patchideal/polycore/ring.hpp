#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "patchideal/errors.hpp"

namespace patchideal {

// A ring variable: either the matrix coordinate z_{row,col} (1-based) of a
// patch chart, or the single homogenizing variable t.
struct VarId {
  enum class Kind : std::uint8_t { chart, homog };

  Kind kind = Kind::chart;
  int row = 0;
  int col = 0;

  static constexpr VarId z(int i, int j) { return {Kind::chart, i, j}; }
  static constexpr VarId t() { return {Kind::homog, 0, 0}; }

  bool is_homog() const { return kind == Kind::homog; }

  friend bool operator==(const VarId&, const VarId&) = default;

  // Default variable precedence: t is the smallest variable; chart variables
  // compare column first, then row.
  friend std::strong_ordering operator<=>(const VarId& a, const VarId& b) {
    if (a.kind != b.kind) return a.is_homog() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = a.col <=> b.col; c != 0) return c;
    return a.row <=> b.row;
  }

  std::string name() const {
    if (is_homog()) return "t";
    return "z[" + std::to_string(row) + "][" + std::to_string(col) + "]";
  }
};

inline constexpr std::size_t kMaxVars = 48;

// Variables of a patch chart. Chart variables occupy indices 0..m-1 sorted by
// the default precedence (ascending), and t sits at index m. The ring is
// immutable and shared by every polynomial built over it.
class Ring {
 public:
  explicit Ring(std::vector<std::pair<int, int>> positions) {
    std::vector<VarId> vars;
    vars.reserve(positions.size() + 1);
    for (auto [i, j] : positions) {
      if (i < 1 || j < 1) throw std::invalid_argument("matrix coordinates are 1-based");
      vars.push_back(VarId::z(i, j));
    }
    std::sort(vars.begin(), vars.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
      throw std::invalid_argument("duplicate chart variable");
    if (vars.size() + 1 > kMaxVars)
      throw std::length_error("too many variables for a chart (limit " + std::to_string(kMaxVars - 1) + ")");
    vars.push_back(VarId::t());
    vars_ = std::move(vars);
  }

  std::size_t size() const { return vars_.size(); }
  std::size_t chart_size() const { return vars_.size() - 1; }
  std::size_t homog_index() const { return vars_.size() - 1; }
  const VarId& var(std::size_t k) const { return vars_[k]; }
  const std::vector<VarId>& vars() const { return vars_; }

  std::optional<std::size_t> find(const VarId& v) const {
    if (v.is_homog()) return homog_index();
    auto it = std::lower_bound(vars_.begin(), vars_.end() - 1, v);
    if (it == vars_.end() - 1 || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
  }

  std::size_t index(const VarId& v) const {
    auto k = find(v);
    if (!k) throw chart_mismatch_error("variable " + v.name() + " is not a coordinate of this chart");
    return *k;
  }

  friend bool operator==(const Ring& a, const Ring& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<VarId> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::pair<int, int>> positions) {
  return std::make_shared<const Ring>(std::move(positions));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw chart_mismatch_error("operands belong to different charts");
}

// Dense exponent vector indexed by ring position, with the total degree and a
// support bitmask cached for fast divisibility tests.
class Monomial {
 public:
  Monomial() = default;

  unsigned operator[](std::size_t k) const { return exp_[k]; }
  unsigned degree() const { return degree_; }
  std::uint64_t support() const { return support_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t k, unsigned e) {
    if (e > 255) throw std::overflow_error("exponent exceeds 255");
    degree_ = degree_ - exp_[k] + e;
    exp_[k] = static_cast<std::uint8_t>(e);
    if (e) support_ |= (std::uint64_t{1} << k);
    else support_ &= ~(std::uint64_t{1} << k);
  }

  static Monomial variable(std::size_t k, unsigned e = 1) {
    Monomial m;
    m.set(k, e);
    return m;
  }

  bool divides(const Monomial& other) const {
    if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
    for (std::uint64_t s = support_; s; s &= s - 1) {
      auto k = static_cast<std::size_t>(__builtin_ctzll(s));
      if (exp_[k] > other.exp_[k]) return false;
    }
    return true;
  }

  bool coprime(const Monomial& other) const { return (support_ & other.support_) == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::uint64_t s = b.support_; s; s &= s - 1) {
      auto k = static_cast<std::size_t>(__builtin_ctzll(s));
      unsigned e = unsigned(r.exp_[k]) + b.exp_[k];
      if (e > 255) throw std::overflow_error("exponent exceeds 255");
      r.exp_[k] = static_cast<std::uint8_t>(e);
    }
    r.degree_ = a.degree_ + b.degree_;
    r.support_ = a.support_ | b.support_;
    return r;
  }

  // a / b, assuming b divides a.
  friend Monomial quotient(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::uint64_t s = b.support_; s; s &= s - 1) {
      auto k = static_cast<std::size_t>(__builtin_ctzll(s));
      r.exp_[k] = static_cast<std::uint8_t>(r.exp_[k] - b.exp_[k]);
      if (r.exp_[k] == 0) r.support_ &= ~(std::uint64_t{1} << k);
    }
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::uint64_t s = b.support_; s; s &= s - 1) {
      auto k = static_cast<std::size_t>(__builtin_ctzll(s));
      if (b.exp_[k] > r.exp_[k]) {
        r.degree_ += b.exp_[k] - r.exp_[k];
        r.exp_[k] = b.exp_[k];
      }
    }
    r.support_ = a.support_ | b.support_;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.support_ == b.support_ && a.exp_ == b.exp_;
  }

  // Byte-wise order; only for use as a container key, not a monomial order.
  friend bool key_less(const Monomial& a, const Monomial& b) { return a.exp_ < b.exp_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t s = support_; s; s &= s - 1) {
      auto k = static_cast<std::size_t>(__builtin_ctzll(s));
      h = (h ^ (k * 256 + exp_[k])) * 1099511628211ull;
    }
    return h;
  }

 private:
  std::array<std::uint8_t, kMaxVars> exp_{};
  std::uint64_t support_ = 0;
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace patchideal
