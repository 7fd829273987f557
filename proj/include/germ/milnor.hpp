// Milnor number, multiplicity, quasihomogeneous weights, and the full Milnor
// sequence of an isolated hypersurface germ.  The sequence entry for plane
// dimension i is the Milnor number of the germ restricted to a general
// i-dimensional plane through the origin, realized here by seeded random
// rational planes with an agreement-then-escalate sampling protocol.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "germ/polynomial.hpp"
#include "germ/standard_basis.hpp"

namespace germ {

// (mu^(n+1), mu^(n), ..., mu^(1), mu^(0)) for a germ in n+1 variables:
// n+2 values, largest plane dimension first.  mu^(0) = 1 by convention and
// mu^(1) = multiplicity - 1; for singular germs the entries are weakly
// increasing when read from mu^(1) upward.  Smooth germs get (0, ..., 0, 1).
struct MilnorSequence {
  std::vector<unsigned long long> values;

  unsigned long long mu() const { return values.front(); }
  unsigned long long multiplicity() const { return values[values.size() - 2] + 1; }
  bool smooth() const { return values.front() == 0; }

  bool operator==(const MilnorSequence& o) const { return values == o.values; }
  bool operator!=(const MilnorSequence& o) const { return values != o.values; }
};

// Positive rational weights, one per variable, each at most 1/2; the germ is
// quasihomogeneous for them when every term has weighted degree exactly 1.
struct WeightVector {
  std::vector<Rational> weights;
};

struct SectionSamplingConfig {
  std::uint64_t seed = 0;
  unsigned num_samples = 3;
  unsigned escalation_samples = 7;
  unsigned coefficient_height = 100;
};

// Partial derivatives of f, one per variable (entries may be zero).
std::vector<Polynomial> jacobian(const Polynomial& f);

// Colength of the Jacobian ideal.  Order-1 germs short-circuit to Finite 0;
// the zero polynomial reports NonIsolated.
// pre: f has no constant term (ConstantTermPresent otherwise).
Colength milnor_number(const Polynomial& f, unsigned degree_cap);
Colength milnor_number(const Polynomial& f);  // default cap from the Jacobian

// Order of vanishing at the origin.
// pre: f nonzero (ZeroPolynomial) without constant term (ConstantTermPresent).
unsigned multiplicity(const Polynomial& f);

// Solves sum_i a_i w_i = 1 over the exponent vectors of f.  Inconsistent
// systems, systems whose weight sum is unbounded along the solution space,
// and solutions outside (0, 1/2] yield nullopt.  Underdetermined consistent
// systems fix every free weight at 1/2 (the largest admissible value), which
// picks a canonical point among the weight-sum minimizers.
std::optional<WeightVector> detect_quasihomogeneous(const Polynomial& f);

// mu = prod_i (1/w_i - 1), exact; NonIntegerResult when the product is not an
// integer (a sign of a non-isolated or misdetected input).
unsigned long long quasihomogeneous_milnor(const WeightVector& w);

// Milnor number of the restriction of f to a general plane of the given
// dimension: draws cfg.num_samples seeded random (num_vars x plane_dim)
// rational matrices; if the per-sample values all agree, that is the answer,
// otherwise the draw escalates to cfg.escalation_samples total and the
// minimum finite value wins (the generic value is minimal by semicontinuity).
// pre: 1 <= plane_dim <= num_vars; f(0) = 0.
// errors: AllSamplesInconclusive when no sample yields a finite value.
unsigned long long generic_section_milnor(const Polynomial& f, std::size_t plane_dim,
                                          const SectionSamplingConfig& cfg);

// Assembles the full sequence: mu^(n+1) by colength, mu^(i) for 2 <= i <= n
// by generic plane sections, mu^(1) = multiplicity - 1, mu^(0) = 1.
// errors: NonIsolatedInput; InconclusiveResult; propagates sampling errors.
MilnorSequence milnor_sequence(const Polynomial& f, const SectionSamplingConfig& cfg);

// Random (num_vars x plane_dim) substitution with entries n/d, n uniform in
// {-height..height}, d uniform in {1..height}, drawn row-major from rng.
LinearSubstitution random_section_matrix(std::size_t num_vars, std::size_t plane_dim, std::mt19937_64& rng,
                                         unsigned height);

}  // namespace germ
