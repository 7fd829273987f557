// Sparse multivariate polynomials over Q: the germ representation used by the
// whole library.  Canonical form bans zero coefficients, so equality is map
// equality and printing is deterministic.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "germ/errors.hpp"
#include "germ/monomial.hpp"
#include "germ/rational.hpp"

namespace germ {

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, TermOrder>;

  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Rational& c);
  static Polynomial variable(std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial::one(num_vars_)); }

  // Minimum total degree over terms; empty for the zero polynomial (order infinity).
  std::optional<unsigned> order() const;
  // Maximum total degree over terms; 0 for the zero polynomial.
  unsigned degree() const;

  // Adds c·m in place, erasing the term if the sum cancels.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Exact formal partial derivative.
  Polynomial derivative(std::size_t var_index) const;

  // Terms of total degree <= degree (jet truncation).
  Polynomial truncated(unsigned degree) const;
  // Terms of total degree == degree.
  Polynomial homogeneous_part(unsigned degree) const;

  // f with x_{var_index} := value, the variable dropped from the ambient space.
  Polynomial substitute_value(std::size_t var_index, const Rational& value) const;
  // f with x_{var_index} := replacement (same ambient space); truncate_at caps
  // the result degree, 0 = no cap.
  Polynomial substitute_one(std::size_t var_index, const Polynomial& replacement,
                            unsigned truncate_at = 0) const;
  // f(x + c): translate the origin to -c.
  Polynomial translated(const std::vector<Rational>& c) const;

  Rational evaluate(const std::vector<Rational>& point) const;

 private:
  std::size_t num_vars_;
  TermMap terms_;
};

// x := M·u pullback.  matrix is row-major, num_target_vars x num_source_vars;
// column j holds the target-space image of source variable u_j.
struct LinearSubstitution {
  std::size_t num_target_vars = 0;
  std::size_t num_source_vars = 0;
  std::vector<Rational> matrix;

  const Rational& at(std::size_t row, std::size_t col) const {
    return matrix[row * num_source_vars + col];
  }
  Rational& at(std::size_t row, std::size_t col) { return matrix[row * num_source_vars + col]; }
  static LinearSubstitution identity(std::size_t n);
};

Polynomial substitute_linear(const Polynomial& f, const LinearSubstitution& sub);

// f scaled by the positive rational that clears denominators and integer
// content; the leading-order coefficients stay sign-faithful.  Rescaling by a
// unit changes no local invariant but keeps arithmetic small.
Polynomial primitive_scale(const Polynomial& f);

std::optional<unsigned> order_of_vanishing(const Polynomial& f);

// Canonical printing; parse(print(f)) == f.
std::string to_string(const Polynomial& f, const std::vector<std::string>& var_names);

}  // namespace germ
