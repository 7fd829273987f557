// Exact rational arithmetic.  GMP's mpq_class already maintains the canonical
// form we rely on everywhere (reduced fraction, positive denominator).
#pragma once

#include <gmpxx.h>

#include <string>

#include "germ/errors.hpp"

namespace germ {

using Int = mpz_class;
using Rational = mpq_class;

// "p/q" with "/q" omitted when q = 1; the sign lives on the numerator.
inline std::string to_string(const Rational& q) {
  return q.get_str();
}

// Accepts "p", "-p", "p/q" with optional sign on the numerator only.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw SyntaxError(0, "rational number, got '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw SyntaxError(0, "nonzero denominator in '" + text + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace germ
