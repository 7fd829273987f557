// Standard bases of ideals in the local ring Q[[x_1..x_n]] via Mora's tangent
// cone algorithm with ecart-guided reduction, plus the colength (vector-space
// dimension of the quotient) computed from the leading-term ideal.
//
// The computation is exact over the rationals.  A degree cap bounds how far
// the basis is allowed to grow: when a remainder whose order exceeds the cap
// would be admitted, it is discarded and the result is flagged, so callers can
// distinguish a certified answer from a truncated one.
#pragma once

#include <vector>

#include "germ/local_order.hpp"
#include "germ/polynomial.hpp"

namespace germ {

struct StandardBasisResult {
  std::vector<Polynomial> generators;        // minimalized, leads ds-descending
  std::vector<Monomial> leading_monomials;   // parallel to generators
  bool degree_cap_hit = false;               // some remainder beyond the cap was dropped
  unsigned degree_cap = 0;
};

struct Colength {
  enum class Status { Finite, NonIsolated, Inconclusive };
  Status status = Status::Inconclusive;
  unsigned long long value = 0;  // meaningful only when Finite
  unsigned degree_cap = 0;

  bool finite() const { return status == Status::Finite; }
};

// Cap used when the caller does not supply one: generous enough for every
// quotient whose dimension is within reach of exact arithmetic.
unsigned default_degree_cap(const std::vector<Polynomial>& generators);

// Weak normal form of f with respect to the (not necessarily complete) basis.
// Reduction picks, among all basis elements whose lead divides lead(h), one of
// minimal ecart, oldest first on ties; when the chosen reducer has larger
// ecart than h itself, h joins the reducer set before the step (Mora's rule,
// which is what makes reduction terminate in the local order).
Polynomial mora_normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const LocalOrder& order);

// Completes the generators to a standard basis by S-polynomial processing
// (largest S-polynomial lead first, oldest pair on ties; coprime-lead pairs
// are skipped).  Remainders of order above degree_cap are dropped and the
// degree_cap_hit flag is set.  Output generators are primitive with positive
// leading coefficient, minimalized (no lead divides another), and sorted with
// the largest lead first.
//
// pre: at least one nonzero generator after dropping zeros; degree_cap at
// least the largest generator order.
StandardBasisResult standard_basis(const std::vector<Polynomial>& generators, const LocalOrder& order, unsigned degree_cap);

// Dimension of Q[[x]]/(generators) as a Q-vector space, by counting standard
// monomials of the leading-term ideal of a standard basis.
//   Finite       -- every variable has a pure power among the leads and (when
//                   the cap was hit) no counted monomial reaches past the cap
//   NonIsolated  -- the basis is complete (cap not hit) yet some variable has
//                   no pure power lead, so the quotient is infinite-dimensional
//   Inconclusive -- the cap was hit and the count cannot be certified
// A unit in the ideal gives Finite 0.
Colength colength(const std::vector<Polynomial>& generators, const LocalOrder& order, unsigned degree_cap);

}  // namespace germ
