// Monomials as exponent vectors.  The exponent vector length always equals the
// ambient variable count of the enclosing polynomial.
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace germ {

struct Monomial {
  std::vector<unsigned> e;

  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exps) : e(std::move(exps)) {}
  static Monomial one(std::size_t num_vars) { return Monomial(std::vector<unsigned>(num_vars, 0)); }

  std::size_t num_vars() const { return e.size(); }
  unsigned degree() const { return std::accumulate(e.begin(), e.end(), 0u); }
  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > m.e[i]) return false;
    }
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

// Canonical storage/printing order: ascending total degree, then terms heavier
// in earlier variables first (lexicographically larger exponent vector first).
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(b.e.begin(), b.e.end(), a.e.begin(), a.e.end());
  }
};

}  // namespace germ
