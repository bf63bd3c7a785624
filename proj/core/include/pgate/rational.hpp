#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace pgate {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& v) { return v.get_str(); }

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& v) { return v.get_den() == 1; }

}  // namespace pgate
