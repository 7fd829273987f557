// Independent cross-check for colength computations.  The dimension of
// Q[x]/(I + m^d) is computed by exact sparse Gaussian elimination on the
// multiplication matrix of the generators against all monomial shifts below
// the truncation degree; once two consecutive truncations agree the common
// value is the colength (the associated graded ring is generated in degree
// one, so the Hilbert function of the quotient cannot restart after a zero).
//
// This route is slower than the standard basis engine and never certifies an
// infinite-dimensional quotient -- running out of truncations yields
// Inconclusive.  The tests use it as an oracle against the main engine.
#pragma once

#include <vector>

#include "germ/polynomial.hpp"
#include "germ/standard_basis.hpp"

namespace germ {

Colength macaulay_colength(const std::vector<Polynomial>& generators, unsigned max_truncation);

}  // namespace germ
