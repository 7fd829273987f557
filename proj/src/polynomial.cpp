#include "germ/polynomial.hpp"

#include <sstream>

namespace germ {

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Monomial::one(num_vars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw IndexOutOfRange("variable index out of range");
  Monomial m = Monomial::one(num_vars);
  m.e[index] = 1;
  Polynomial p(num_vars);
  p.add_term(m, 1);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<unsigned> Polynomial::order() const {
  if (terms_.empty()) return std::nullopt;
  // Map order is ascending in total degree, so the first key is minimal.
  return terms_.begin()->first.degree();
}

unsigned Polynomial::degree() const {
  if (terms_.empty()) return 0;
  return terms_.rbegin()->first.degree();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(num_vars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  if (num_vars_ != g.num_vars_) throw DimensionMismatch("polynomial addition: variable counts differ");
  Polynomial r(*this);
  for (const auto& [m, c] : g.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  if (num_vars_ != g.num_vars_) throw DimensionMismatch("polynomial subtraction: variable counts differ");
  Polynomial r(*this);
  for (const auto& [m, c] : g.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  if (num_vars_ != g.num_vars_) throw DimensionMismatch("polynomial product: variable counts differ");
  Polynomial r(num_vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : g.terms_) {
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(num_vars_);
  if (c == 0) return r;
  for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial acc = Polynomial::constant(num_vars_, 1);
  Polynomial base(*this);
  while (k > 0) {
    if (k & 1u) acc = acc * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return acc;
}

Polynomial Polynomial::derivative(std::size_t var_index) const {
  if (var_index >= num_vars_) throw IndexOutOfRange("derivative: variable index out of range");
  Polynomial r(num_vars_);
  for (const auto& [m, c] : terms_) {
    unsigned e = m.e[var_index];
    if (e == 0) continue;
    Monomial dm(m);
    dm.e[var_index] = e - 1;
    r.add_term(dm, c * Rational(e));
  }
  return r;
}

Polynomial Polynomial::truncated(unsigned degree) const {
  Polynomial r(num_vars_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() <= degree) r.terms_.emplace(m, c);
  }
  return r;
}

Polynomial Polynomial::homogeneous_part(unsigned degree) const {
  Polynomial r(num_vars_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == degree) r.terms_.emplace(m, c);
  }
  return r;
}

Polynomial Polynomial::substitute_value(std::size_t var_index, const Rational& value) const {
  if (var_index >= num_vars_) throw IndexOutOfRange("substitute_value: variable index out of range");
  Polynomial r(num_vars_ - 1);
  std::vector<Rational> value_pow{Rational(1)};
  for (const auto& [m, c] : terms_) {
    unsigned e = m.e[var_index];
    while (value_pow.size() <= e) value_pow.push_back(value_pow.back() * value);
    Monomial rm;
    rm.e.reserve(num_vars_ - 1);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (i != var_index) rm.e.push_back(m.e[i]);
    }
    r.add_term(rm, c * value_pow[e]);
  }
  return r;
}

Polynomial Polynomial::substitute_one(std::size_t var_index, const Polynomial& replacement,
                                      unsigned truncate_at) const {
  if (var_index >= num_vars_) throw IndexOutOfRange("substitute_one: variable index out of range");
  if (replacement.num_vars_ != num_vars_)
    throw DimensionMismatch("substitute_one: replacement lives in a different variable space");
  // Memoized powers of the replacement, truncated as we go when a cap is set so
  // intermediate products stay bounded.
  std::vector<Polynomial> rep_pow{Polynomial::constant(num_vars_, 1)};
  auto power = [&](unsigned k) -> const Polynomial& {
    while (rep_pow.size() <= k) {
      Polynomial next = rep_pow.back() * replacement;
      if (truncate_at > 0) next = next.truncated(truncate_at);
      rep_pow.push_back(std::move(next));
    }
    return rep_pow[k];
  };
  Polynomial r(num_vars_);
  for (const auto& [m, c] : terms_) {
    Monomial rest(m);
    unsigned e = rest.e[var_index];
    rest.e[var_index] = 0;
    if (truncate_at > 0 && rest.degree() > truncate_at) continue;
    Polynomial piece = power(e);
    for (const auto& [pm, pc] : piece.terms()) {
      Monomial prod = pm * rest;
      if (truncate_at > 0 && prod.degree() > truncate_at) continue;
      r.add_term(prod, pc * c);
    }
  }
  return r;
}

Polynomial Polynomial::translated(const std::vector<Rational>& c) const {
  if (c.size() != num_vars_) throw DimensionMismatch("translate: point dimension mismatch");
  Polynomial r(*this);
  for (std::size_t i = 0; i < num_vars_; ++i) {
    if (c[i] == 0) continue;
    Polynomial rep = Polynomial::variable(num_vars_, i) + Polynomial::constant(num_vars_, c[i]);
    r = r.substitute_one(i, rep);
  }
  return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != num_vars_) throw DimensionMismatch("evaluate: point dimension mismatch");
  std::vector<std::vector<Rational>> pows(num_vars_, {Rational(1)});
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational prod(c);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      auto& p = pows[i];
      while (p.size() <= m.e[i]) p.push_back(p.back() * point[i]);
      prod *= p[m.e[i]];
    }
    sum += prod;
  }
  return sum;
}

LinearSubstitution LinearSubstitution::identity(std::size_t n) {
  LinearSubstitution s;
  s.num_target_vars = n;
  s.num_source_vars = n;
  s.matrix.assign(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) s.at(i, i) = 1;
  return s;
}

Polynomial substitute_linear(const Polynomial& f, const LinearSubstitution& sub) {
  if (sub.num_target_vars != f.num_vars())
    throw DimensionMismatch("substitute_linear: matrix rows must match the polynomial's variables");
  const std::size_t ns = sub.num_source_vars;
  // Linear image of each target variable in the source space.
  std::vector<Polynomial> image;
  image.reserve(f.num_vars());
  for (std::size_t i = 0; i < f.num_vars(); ++i) {
    Polynomial li(ns);
    for (std::size_t j = 0; j < ns; ++j) {
      Monomial m = Monomial::one(ns);
      m.e[j] = 1;
      li.add_term(m, sub.at(i, j));
    }
    image.push_back(std::move(li));
  }
  std::vector<std::vector<Polynomial>> image_pow(f.num_vars());
  for (std::size_t i = 0; i < f.num_vars(); ++i) image_pow[i].push_back(Polynomial::constant(ns, 1));
  auto power = [&](std::size_t i, unsigned k) -> const Polynomial& {
    auto& pows = image_pow[i];
    while (pows.size() <= k) pows.push_back(pows.back() * image[i]);
    return pows[k];
  };
  Polynomial r(ns);
  for (const auto& [m, c] : f.terms()) {
    Polynomial prod = Polynomial::constant(ns, c);
    for (std::size_t i = 0; i < f.num_vars(); ++i) {
      if (m.e[i] > 0) prod = prod * power(i, m.e[i]);
    }
    r = r + prod;
  }
  return r;
}

Polynomial primitive_scale(const Polynomial& f) {
  if (f.is_zero()) return f;
  Int den = 1;
  for (const auto& [m, c] : f.terms()) den = lcm(den, c.get_den());
  Int g = 0;
  for (const auto& [m, c] : f.terms()) g = gcd(g, Int(c.get_num() * (den / c.get_den())));
  Rational scale(den, g);
  scale.canonicalize();
  if (scale == 1) return f;
  return f.scaled(scale);
}

std::optional<unsigned> order_of_vanishing(const Polynomial& f) { return f.order(); }

std::string to_string(const Polynomial& f, const std::vector<std::string>& var_names) {
  if (var_names.size() != f.num_vars())
    throw DimensionMismatch("to_string: variable name count mismatch");
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    std::string vars;
    for (std::size_t i = 0; i < f.num_vars(); ++i) {
      if (m.e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += var_names[i];
      if (m.e[i] > 1) vars += "^" + std::to_string(m.e[i]);
    }
    if (vars.empty()) {
      out << to_string(mag);
    } else if (mag == 1) {
      out << vars;
    } else {
      out << to_string(mag) << "*" << vars;
    }
  }
  return out.str();
}

}  // namespace germ
