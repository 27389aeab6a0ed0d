#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "patchideal/errors.hpp"

namespace patchideal {

// A permutation of {1..n} in one-line notation. Its permutation matrix has
// a 1 at (w(j), j) for every column j.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<int> seen(w_.size() + 1, 0);
    for (int v : w_) {
      if (v < 1 || v > static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(v)]++)
        throw std::invalid_argument("not a permutation of 1.." + std::to_string(w_.size()));
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  static Permutation longest(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = n - j;
    return Permutation(std::move(w));
  }

  // "2143" (compact digits, n <= 9) or "2,1,4,3".
  static Permutation parse(const std::string& text) {
    std::vector<int> w;
    if (text.find(',') == std::string::npos) {
      for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c < '1' || c > '9') throw std::invalid_argument("bad permutation '" + text + "': use digits 1-9 or commas");
        w.push_back(c - '0');
      }
      if (w.size() > 9) throw std::invalid_argument("compact permutation form needs n <= 9: '" + text + "'");
    } else {
      std::size_t pos = 0;
      while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        std::string item = text.substr(pos, next - pos);
        try {
          std::size_t used = 0;
          w.push_back(std::stoi(item, &used));
          while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
          if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
          throw std::invalid_argument("bad permutation entry '" + item + "' in '" + text + "'");
        }
        pos = next + 1;
      }
    }
    if (w.empty()) throw std::invalid_argument("empty permutation");
    return Permutation(std::move(w));
  }

  int n() const { return static_cast<int>(w_.size()); }
  // w(j), 1-based.
  int operator()(int j) const { return w_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<int>& one_line() const { return w_; }

  Permutation inverse() const {
    std::vector<int> inv(w_.size());
    for (std::size_t j = 0; j < w_.size(); ++j) inv[static_cast<std::size_t>(w_[j] - 1)] = static_cast<int>(j) + 1;
    return Permutation(std::move(inv));
  }

  // Number of inversions.
  int length() const {
    int l = 0;
    for (std::size_t a = 0; a < w_.size(); ++a)
      for (std::size_t b = a + 1; b < w_.size(); ++b) l += w_[a] > w_[b];
    return l;
  }

  bool is_involution() const { return *this == inverse(); }

  std::string str() const {
    std::string out;
    bool compact = w_.size() <= 9;
    for (std::size_t j = 0; j < w_.size(); ++j) {
      if (!compact && j) out += ",";
      out += std::to_string(w_[j]);
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

// (i_1, ..., i_k) with positive parts summing to n.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
    for (int p : parts_)
      if (p < 1) throw std::invalid_argument("composition parts must be positive");
  }

  static Composition parse(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string::npos) next = text.size();
      try {
        parts.push_back(std::stoi(text.substr(pos, next - pos)));
      } catch (const std::logic_error&) {
        throw std::invalid_argument("bad composition '" + text + "'");
      }
      pos = next + 1;
    }
    return Composition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  int n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  // First index (1-based) of block b (0-based).
  int block_start(std::size_t b) const {
    return 1 + std::accumulate(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(b), 0);
  }

  std::string str() const {
    std::string out = "(";
    for (std::size_t k = 0; k < parts_.size(); ++k) out += (k ? "," : "") + std::to_string(parts_[k]);
    return out + ")";
  }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

// Longest element of S_{i_1} x ... x S_{i_k}: each block reversed.
inline Permutation parabolic_element(const Composition& c) {
  std::vector<int> w;
  int start = 0;
  for (int p : c.parts()) {
    for (int k = p; k >= 1; --k) w.push_back(start + k);
    start += p;
  }
  return Permutation(std::move(w));
}

// The composition whose parabolic element is w, if w is one.
inline std::optional<Composition> composition_of(const Permutation& w) {
  std::vector<int> parts;
  int j = 1;
  while (j <= w.n()) {
    int b = w(j);
    if (b < j) return std::nullopt;
    for (int k = 0; j + k <= b; ++k)
      if (w(j + k) != b - k) return std::nullopt;
    parts.push_back(b - j + 1);
    j = b + 1;
  }
  return Composition(std::move(parts));
}

inline bool is_parabolic(const Permutation& w) { return composition_of(w).has_value(); }

struct ParabolicPoint {
  Composition composition;
  Permutation w;
};

// All 2^(n-1) compositions of n, lexicographic on parts, with their w_P.
inline std::vector<ParabolicPoint> enumerate_parabolics(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<ParabolicPoint> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      Composition c(parts);
      out.push_back({c, parabolic_element(c)});
      return;
    }
    for (int p = 1; p <= left; ++p) {
      parts.push_back(p);
      self(self, left - p);
      parts.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

// Some subsequence of w is order-isomorphic to p. False when p is longer.
inline bool contains_pattern(const Permutation& w, const Permutation& p) {
  int n = w.n(), k = p.n();
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int depth, int from) -> bool {
    if (depth == k) return true;
    for (int a = from; a <= n - (k - depth) + 1; ++a) {
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        bool pw = w(idx[static_cast<std::size_t>(d)]) < w(a);
        bool pp = p(d + 1) < p(depth + 1);
        ok = pw == pp;
      }
      if (!ok) continue;
      idx[static_cast<std::size_t>(depth)] = a;
      if (self(self, depth + 1, a + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 1);
}

enum class Orientation { southwest, northwest };

// Counts of 1's of a permutation matrix in corner regions:
// southwest r(i,j) = #{c <= j : w(c) >= i}, northwest r(i,j) = #{c <= j : w(c) <= i}.
class RankMatrix {
 public:
  RankMatrix(int n, Orientation o) : n_(n), o_(o), v_(static_cast<std::size_t>(n * n), 0) {}

  int n() const { return n_; }
  Orientation orientation() const { return o_; }
  // 1-based; returns 0 outside 1..n (boundary convention).
  int operator()(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) return 0;
    return v_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))];
  }
  void set(int i, int j, int v) { v_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))] = v; }

  friend bool operator==(const RankMatrix&, const RankMatrix&) = default;

 private:
  int n_;
  Orientation o_;
  std::vector<int> v_;
};

inline RankMatrix rank_matrix(const Permutation& w, Orientation o) {
  int n = w.n();
  RankMatrix r(n, o);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int c = 0;
      for (int col = 1; col <= j; ++col) c += o == Orientation::southwest ? w(col) >= i : w(col) <= i;
      r.set(i, j, c);
    }
  return r;
}

// v <= u in Bruhat order iff the northwest ranks of v dominate those of u.
inline bool bruhat_leq(const Permutation& v, const Permutation& u) {
  if (v.n() != u.n()) throw std::invalid_argument("Bruhat comparison of permutations of different sizes");
  RankMatrix rv = rank_matrix(v, Orientation::northwest), ru = rank_matrix(u, Orientation::northwest);
  for (int i = 1; i <= v.n(); ++i)
    for (int j = 1; j <= v.n(); ++j)
      if (rv(i, j) < ru(i, j)) return false;
  return true;
}

// Block permutations when w's matrix is block diagonal with the given sizes.
inline std::optional<std::vector<Permutation>> block_split(const Permutation& w, const Composition& c) {
  if (c.n() != w.n()) throw std::invalid_argument("composition does not sum to n");
  std::vector<Permutation> out;
  int start = 1;
  for (int p : c.parts()) {
    std::vector<int> block;
    for (int j = start; j < start + p; ++j) {
      int v = w(j);
      if (v < start || v >= start + p) return std::nullopt;
      block.push_back(v - start + 1);
    }
    out.emplace_back(std::move(block));
    start += p;
  }
  return out;
}

}  // namespace patchideal
