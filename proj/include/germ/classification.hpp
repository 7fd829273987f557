// Recognition of rational double points.  Surface germs (three variables)
// are classified into the A_k / D_k / E_6, E_7, E_8 types by Milnor number,
// corank, and the factor structure of the residual cubic after splitting off
// the nondegenerate quadratic part; threefold germs (four variables) are
// classified into the compound types cA/cD/cE by classifying generic
// hyperplane slices.
#pragma once

#include <string>

#include "germ/milnor.hpp"
#include "germ/polynomial.hpp"

namespace germ {

// Factor structure of a binary cubic form over the algebraic closure,
// decided exactly over Q via the discriminant and the Hessian.
enum class BinaryCubicShape { ThreeDistinctFactors, DoubleFactor, TripleFactor, Zero };

struct SingularityClass {
  enum class Kind { Smooth, A, D, E, CA, CD, CE, NotDuVal, NotCDV };
  Kind kind = Kind::NotDuVal;
  unsigned k = 0;  // subscript; meaningful for the lettered kinds only
  unsigned long long milnor = 0;
  MilnorSequence sequence;
  unsigned corank = 0;

  // "A_3", "cE_7", "Smooth", "NotDuVal", "NotCDV".
  std::string name() const;

  bool operator==(const SingularityClass& o) const { return kind == o.kind && k == o.k; }
  bool operator!=(const SingularityClass& o) const { return !(*this == o); }
};

// Corank of the quadratic part: num_vars - rank of the symmetric matrix of
// the degree-2 homogeneous part, exactly over Q.
// pre: f(0) = 0, order >= 2 (OrderOne on smooth germs).
unsigned hessian_corank(const Polynomial& f);

// Splits off a nondegenerate quadratic form by exact coordinate changes
// truncated at jet_degree and returns the residual germ in the corank many
// remaining variables (re-indexed; empty polynomial in zero variables for
// corank 0).  The Milnor number is preserved as long as jet_degree exceeds
// the determinacy of f; callers use jet_degree = mu + 2.
// pre: jet_degree >= 3; f(0) = 0, order >= 2.
// errors: SplitFailure when the pivoting does not settle within its bound.
Polynomial splitting_reduce(const Polynomial& f, unsigned jet_degree);

// Shape of the degree-3 homogeneous part of a two-variable polynomial.
BinaryCubicShape binary_cubic_shape(const Polynomial& f);

// Surface classification per the recognition table: corank 0 -> A_1;
// corank 1 -> A_mu (sequence must read (mu,1,1,1)); corank 2 -> D or E by
// the residual cubic shape (sequence must read (mu,2,1,1)); everything else,
// including any table mismatch, comes back NotDuVal with its invariants.
// pre: f in three variables with finite Milnor number.
// errors: NonIsolatedInput; InconclusiveResult; propagates sampling errors.
SingularityClass classify_du_val(const Polynomial& f, const SectionSamplingConfig& cfg);

// Threefold classification: classifies cfg.num_samples random hyperplane
// slices; full agreement fixes the compound type, otherwise the draw
// escalates and the type of the minimal-Milnor-number slice wins.  Distinct
// types at the minimal value raise SliceDisagreement rather than guessing.
// The reported sequence is (mu^(4), then the slice type's table row).
// pre: f in four variables with finite Milnor number.
// errors: NonIsolatedInput; InconclusiveResult; SliceDisagreement;
//         AllSamplesInconclusive.
SingularityClass classify_cdv(const Polynomial& f, const SectionSamplingConfig& cfg);

}  // namespace germ
