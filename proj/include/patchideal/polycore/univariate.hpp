#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace patchideal {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
  return r;
}

}  // namespace detail

// Dense univariate integer polynomial in eta; coeffs()[k] is the coefficient
// of eta^k. Trailing zeros are trimmed, so the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<std::int64_t> c) : c_(c) { trim(); }
  explicit IntPoly(std::vector<std::int64_t> c) : c_(std::move(c)) { trim(); }

  static IntPoly one() { return IntPoly{1}; }

  // 1 - eta^d
  static IntPoly one_minus_power(unsigned d) {
    std::vector<std::int64_t> c(d + 1, 0);
    c[0] += 1;
    c[d] -= 1;
    return IntPoly(std::move(c));
  }

  const std::vector<std::int64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0; }

  std::int64_t at_one() const {
    std::int64_t s = 0;
    for (auto v : c_) s = detail::checked_add(s, v);
    return s;
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = detail::checked_add(a[k], b[k]);
    return IntPoly(std::move(c));
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = detail::checked_add(a[k], -b[k]);
    return IntPoly(std::move(c));
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = detail::checked_add(c[i + j], detail::checked_mul(a.c_[i], b.c_[j]));
    return IntPoly(std::move(c));
  }

  // eta^s * p
  IntPoly shifted(unsigned s) const {
    if (is_zero()) return {};
    std::vector<std::int64_t> c(s, 0);
    c.insert(c.end(), c_.begin(), c_.end());
    return IntPoly(std::move(c));
  }

  // Exact division by (1 - eta); nullopt if (1 - eta) does not divide.
  std::optional<IntPoly> divide_one_minus_eta() const {
    if (is_zero()) return IntPoly{};
    if (c_.size() == 1) return std::nullopt;
    // p = (1 - eta) q  gives  q_k = p_0 + ... + p_k.
    std::vector<std::int64_t> q(c_.size() - 1, 0);
    std::int64_t run = 0;
    for (std::size_t k = 0; k + 1 < c_.size(); ++k) q[k] = run = detail::checked_add(run, c_[k]);
    if (detail::checked_add(run, c_.back()) != 0) return std::nullopt;
    return IntPoly(std::move(q));
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string str(const std::string& var = "eta") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      std::int64_t v = c_[k];
      if (v == 0) continue;
      std::int64_t mag = v < 0 ? -v : v;
      if (out.empty()) out += v < 0 ? "-" : "";
      else out += v < 0 ? " - " : " + ";
      if (k == 0 || mag != 1) out += std::to_string(mag);
      if (k > 0) {
        if (mag != 1) out += "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<std::int64_t> c_;
};

// Integer Laurent polynomial in chi: exponent -> nonzero coefficient.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::map<int, std::int64_t> c) : c_(std::move(c)) { trim(); }

  static LaurentPoly one() { return LaurentPoly(std::map<int, std::int64_t>{{0, 1}}); }

  // 1 - chi^d; zero when d == 0.
  static LaurentPoly one_minus_power(int d) {
    LaurentPoly p;
    p.c_[0] += 1;
    p.c_[d] -= 1;
    p.trim();
    return p;
  }

  const std::map<int, std::int64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto [ea, ca] : a.c_)
      for (auto [eb, cb] : b.c_) r.c_[ea + eb] = detail::checked_add(r.c_[ea + eb], detail::checked_mul(ca, cb));
    r.trim();
    return r;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string str(const std::string& var = "chi") const {
    if (is_zero()) return "0";
    std::string out;
    for (auto [e, v] : c_) {
      std::int64_t mag = v < 0 ? -v : v;
      if (out.empty()) out += v < 0 ? "-" : "";
      else out += v < 0 ? " - " : " + ";
      if (e == 0 || mag != 1) out += std::to_string(mag);
      if (e != 0) {
        if (mag != 1) out += "*";
        out += var;
        if (e != 1) out += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
      }
    }
    return out;
  }

 private:
  void trim() {
    for (auto it = c_.begin(); it != c_.end();) it = it->second == 0 ? c_.erase(it) : std::next(it);
  }

  std::map<int, std::int64_t> c_;
};

// prod (1 - chi^d) over the given exponents.
inline LaurentPoly expand_factors(const std::vector<int>& exponents) {
  LaurentPoly p = LaurentPoly::one();
  for (int d : exponents) p = p * LaurentPoly::one_minus_power(d);
  return p;
}

}  // namespace patchideal
