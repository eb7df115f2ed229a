#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace movcone {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "p" or "p/q" with optional sign; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

inline int sign(const Integer& z) { return sgn(z); }
inline int sign(const Rational& q) { return sgn(q); }

} // namespace movcone
