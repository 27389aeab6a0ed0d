#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "patchideal/polycore/rational.hpp"
#include "patchideal/polycore/ring.hpp"
#include "patchideal/polycore/term_order.hpp"

namespace patchideal {

struct Term {
  Monomial mono;
  Rational coef;
};

namespace detail {

// Default order: grevlex with t smallest and chart variables column-first.
// Written out directly because it sorts every polynomial in the library.
inline int default_compare(const Monomial& a, const Monomial& b, std::size_t homog) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  if (a[homog] != b[homog]) return a[homog] < b[homog] ? 1 : -1;
  for (std::size_t k = 0; k < homog; ++k)
    if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
  return 0;
}

}  // namespace detail

// Exact multivariate polynomial over the variables of one chart. Terms are
// kept sorted descending in the default order with no zero coefficients, so
// structural equality is polynomial equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    canonicalize();
  }

  static Polynomial constant(RingPtr ring, const Rational& c) {
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.push_back({Monomial{}, c});
    return p;
  }

  static Polynomial variable(RingPtr ring, const VarId& v, unsigned e = 1) {
    auto k = ring->index(v);
    Polynomial p(std::move(ring));
    p.terms_.push_back({Monomial::variable(k, e), Rational(1)});
    return p;
  }

  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c) {
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  // Leading term under the default order.
  const Term& leading() const {
    if (is_zero()) throw degenerate_input_error("zero polynomial has no leading term");
    return terms_.front();
  }

  Rational constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
    return 0;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, chart_degree(t.mono));
    return d;
  }

  unsigned chart_degree(const Monomial& m) const { return m.degree() - m[ring_->homog_index()]; }

  bool mentions(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[var] != 0; });
  }

  bool mentions_homog() const { return mentions(ring_->homog_index()); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (!a.terms_.empty() && !same_ring(a.ring_, b.ring_)) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k)
      if (!(a.terms_[k].mono == b.terms_[k].mono) || a.terms_[k].coef != b.terms_[k].coef) return false;
    return true;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    Polynomial r(a.ring_);
    if (a.is_zero() || b.is_zero()) return r;
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) acc[s.mono * t.mono] += s.coef * t.coef;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) r.terms_.push_back({m, std::move(c)});
    r.sort_terms();
    return r;
  }

  friend Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r(p.ring_);
    if (c == 0) return r;
    r.terms_ = p.terms_;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(ring_, 1), base = *this;
    while (e) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return r;
  }

  Polynomial derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      unsigned e = t.mono[var];
      if (e == 0) continue;
      Monomial m = t.mono;
      m.set(var, e - 1);
      out.push_back({m, t.coef * e});
    }
    return Polynomial(ring_, std::move(out));
  }

  // Evaluate at a point given as one value per ring index.
  Rational evaluate(const std::vector<Rational>& point) const {
    if (point.size() != ring_->size()) throw std::invalid_argument("point has wrong number of coordinates");
    Rational sum = 0;
    for (const auto& t : terms_) {
      Rational v = t.coef;
      for (std::uint64_t s = t.mono.support(); s; s &= s - 1) {
        auto k = static_cast<std::size_t>(__builtin_ctzll(s));
        for (unsigned e = 0; e < t.mono[k]; ++e) v *= point[k];
      }
      sum += v;
    }
    return sum;
  }

  // Sum of the terms of minimal total degree in the chart variables.
  Polynomial lowest_form() const {
    if (is_zero()) throw degenerate_input_error("lowest form of the zero polynomial");
    unsigned d = chart_degree(terms_.front().mono);
    for (const auto& t : terms_) d = std::min(d, chart_degree(t.mono));
    std::vector<Term> out;
    for (const auto& t : terms_)
      if (chart_degree(t.mono) == d) out.push_back(t);
    return Polynomial(ring_, std::move(out));
  }

  // Multiply each term of chart degree d by t^(D-d), D the maximal degree.
  Polynomial homogenize() const {
    if (is_zero()) throw degenerate_input_error("homogenizing the zero polynomial");
    if (mentions_homog()) throw std::invalid_argument("polynomial already involves t");
    unsigned D = total_degree();
    std::size_t h = ring_->homog_index();
    std::vector<Term> out = terms_;
    for (auto& t : out) t.mono.set(h, D - t.mono.degree());
    return Polynomial(ring_, std::move(out));
  }

  // Set t = 1.
  Polynomial dehomogenize() const {
    std::size_t h = ring_->homog_index();
    std::vector<Term> out = terms_;
    for (auto& t : out) t.mono.set(h, 0);
    return Polynomial(ring_, std::move(out));
  }

  // Integer coefficients with gcd 1 and positive leading coefficient.
  Polynomial normalized() const {
    if (is_zero()) return *this;
    Integer den = 1, num = 0;
    for (const auto& t : terms_) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coef.get_num_mpz_t());
    }
    Rational scale(den, num);
    scale.canonicalize();
    if (terms_.front().coef < 0) scale = -scale;
    return scale * *this;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / terms_.front().coef;
    return inv * *this;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      bool neg = t.coef < 0;
      Rational mag = neg ? Rational(-t.coef) : t.coef;
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      std::string mono = monomial_str(t.mono);
      if (mono.empty()) {
        out += to_string(mag);
      } else {
        if (mag != 1) out += to_string(mag) + "*";
        out += mono;
      }
    }
    return out;
  }

  std::string monomial_str(const Monomial& m) const {
    std::string out;
    auto emit = [&](std::size_t k) {
      if (m[k] == 0) return;
      if (!out.empty()) out += "*";
      out += ring_->var(k).name();
      if (m[k] > 1) out += "^" + std::to_string(m[k]);
    };
    for (std::size_t k = ring_->chart_size(); k-- > 0;) emit(k);
    emit(ring_->homog_index());
    return out;
  }

 private:
  void sort_terms() {
    std::size_t h = ring_->homog_index();
    std::sort(terms_.begin(), terms_.end(),
              [h](const Term& a, const Term& b) { return detail::default_compare(a.mono, b.mono, h) > 0; });
  }

  void canonicalize() {
    if (!ring_) {
      if (!terms_.empty()) throw std::invalid_argument("polynomial terms without a ring");
      return;
    }
    sort_terms();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coef += t.coef;
      } else {
        if (!out.empty() && out.back().coef == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coef == 0) out.pop_back();
    terms_ = std::move(out);
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    if (a.ring_ && b.ring_) require_same_ring(a.ring_, b.ring_);
    Polynomial r(a.ring_ ? a.ring_ : b.ring_);
    if (!r.ring_) return r;
    std::size_t h = r.ring_->homog_index();
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int c = i == a.size() ? -1 : j == b.size() ? 1 : detail::default_compare(a.terms_[i].mono, b.terms_[j].mono, h);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(b.terms_[j++]);
        if (subtract) r.terms_.back().coef = -r.terms_.back().coef;
      } else {
        Rational s = subtract ? Rational(a.terms_[i].coef - b.terms_[j].coef) : Rational(a.terms_[i].coef + b.terms_[j].coef);
        if (s != 0) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
        ++i, ++j;
      }
    }
    return r;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline Polynomial var(const RingPtr& ring, int i, int j) { return Polynomial::variable(ring, VarId::z(i, j)); }
inline Polynomial homog_var(const RingPtr& ring) { return Polynomial::variable(ring, VarId::t()); }

// Simultaneous substitution of variables by polynomials of the same chart;
// unmapped variables are fixed.
inline Polynomial substitute_affine(const Polynomial& p, const std::map<VarId, Polynomial>& sub) {
  const RingPtr& ring = p.ring();
  if (!ring) return p;
  std::vector<std::optional<Polynomial>> image(ring->size());
  for (const auto& [v, q] : sub) {
    require_same_ring(ring, q.ring());
    image[ring->index(v)] = q;
  }
  std::map<std::pair<std::size_t, unsigned>, Polynomial> powers;
  auto power = [&](std::size_t k, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(k, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, image[k]->pow(e)).first;
    return it->second;
  };
  Polynomial out(ring);
  for (const auto& t : p.terms()) {
    Monomial kept;
    std::vector<std::pair<std::size_t, unsigned>> replaced;
    for (std::uint64_t s = t.mono.support(); s; s &= s - 1) {
      auto k = static_cast<std::size_t>(__builtin_ctzll(s));
      if (image[k]) replaced.emplace_back(k, t.mono[k]);
      else kept.set(k, t.mono[k]);
    }
    Polynomial term = Polynomial::monomial(ring, kept, t.coef);
    for (auto [k, e] : replaced) term *= power(k, e);
    out += term;
  }
  return out;
}

// Parse the text format: sums of terms like "-1/2*z[3][1]^2*z[1][1]" or
// "t*z[4][1]". The compact form "z31" is accepted for single-digit indices.
inline Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> void {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "' at " + std::to_string(pos) + ": " + why);
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> unsigned long {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return std::stoul(std::string(text.substr(start, pos - start)));
  };
  Polynomial sum(ring);
  skip();
  bool first = true;
  while (pos < text.size()) {
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') {
      neg = text[pos] == '-';
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Rational coef = 1;
    Monomial mono;
    bool any = false;
    while (true) {
      skip();
      if (pos >= text.size()) fail("unexpected end");
      char c = text[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
        coef *= parse_rational(std::string(text.substr(start, pos - start)));
      } else if (c == 'z' || c == 't') {
        ++pos;
        VarId v = VarId::t();
        if (c == 'z') {
          if (pos < text.size() && text[pos] == '[') {
            ++pos;
            int i = static_cast<int>(number());
            if (pos + 1 >= text.size() || text[pos] != ']' || text[pos + 1] != '[') fail("expected ']['");
            pos += 2;
            int j = static_cast<int>(number());
            if (pos >= text.size() || text[pos] != ']') fail("expected ']'");
            ++pos;
            v = VarId::z(i, j);
          } else {
            if (pos + 1 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])) ||
                !std::isdigit(static_cast<unsigned char>(text[pos + 1])))
              fail("expected z[i][j] or zij");
            v = VarId::z(text[pos] - '0', text[pos + 1] - '0');
            pos += 2;
          }
        }
        unsigned e = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip();
          e = static_cast<unsigned>(number());
        }
        auto k = ring->index(v);
        mono.set(k, mono[k] + e);
      } else if (c == '(') {
        fail("parentheses are not supported");
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      any = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    sum += Polynomial::monomial(ring, mono, neg ? Rational(-coef) : coef);
    skip();
  }
  return sum;
}

}  // namespace patchideal
