#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "patchideal/errors.hpp"

namespace patchideal {

// Exact coefficients. mpq_class keeps results of arithmetic canonical
// (lowest terms, positive denominator); values built from a numerator and
// denominator go through make_rational so that they are canonical as well.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw degenerate_input_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw degenerate_input_error("rational with zero denominator");
  q.canonicalize();
  return q;
}

inline bool fits_int64(const Integer& z) {
  return z.fits_slong_p();
}

}  // namespace patchideal
