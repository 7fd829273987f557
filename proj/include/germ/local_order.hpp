// The local monomial order used for standard bases: anti-graded reverse
// lexicographic.  Lower total degree is LARGER (so 1 is the top monomial and
// multiplying by a variable moves strictly down); degree ties are broken
// reverse-lexicographically, scanning exponents from the last variable.
#pragma once

#include "germ/monomial.hpp"
#include "germ/polynomial.hpp"

namespace germ {

struct LocalOrder {
  enum class Kind { AntiGradedRevLex };
  Kind kind = Kind::AntiGradedRevLex;
  std::size_t num_vars = 0;

  static LocalOrder anti_graded_revlex(std::size_t num_vars) { return {Kind::AntiGradedRevLex, num_vars}; }
};

// +1 when a is larger than b under the local order, -1 when smaller, 0 on equality.
inline int local_compare(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db ? 1 : -1;
  for (std::size_t i = a.e.size(); i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

inline bool local_greater(const Monomial& a, const Monomial& b) { return local_compare(a, b) > 0; }

// Largest monomial of f under the local order; pre: f nonzero.
Monomial local_leading_monomial(const Polynomial& f);

}  // namespace germ
