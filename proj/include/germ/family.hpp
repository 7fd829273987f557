// One-parameter families of hypersurface germs with declared singular
// sections: per-fiber Milnor data, the Whitney-equisingularity verdict by
// comparing Milnor-sequence multisets across sampled parameters, and the
// equisingular stratification of the samples.
//
// Verdict semantics are one-sided: NotEquisingular and Degenerate are
// conclusive at the sampled parameters, while EquisingularEvidence is a
// sampled certificate (constancy over finitely many parameter values, not a
// proof over the whole base).  Only the declared sections are examined;
// undeclared singular points are never searched for.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germ/milnor.hpp"
#include "germ/polynomial.hpp"

namespace germ {

struct FamilySpec {
  std::vector<std::string> variables;  // space variables (n+1 of them)
  std::string parameter;               // parameter symbol
  // Polynomial in variables + parameter, the parameter as the LAST variable.
  Polynomial family_polynomial{0};
  // Each section: one coordinate per space variable, each a polynomial in the
  // single variable `parameter`.
  std::vector<std::vector<Polynomial>> sections;
  std::vector<Rational> parameter_samples;
  std::vector<Rational> excluded_parameters;
};

struct SectionOutcome {
  std::vector<Rational> point;  // section coordinates at this parameter
  bool isolated = false;
  MilnorSequence sequence;  // meaningful when isolated
};

struct FiberReport {
  Rational parameter;
  std::vector<SectionOutcome> per_section;
  std::optional<unsigned long long> milnor_sum;  // set when every section is isolated
};

struct Stratum {
  bool degenerate = false;                 // block of fibers without full Milnor data
  std::vector<MilnorSequence> multiset;    // sorted; empty for the degenerate block
  std::vector<Rational> parameters;        // ascending
};

struct FamilyVerdict {
  enum class Verdict { EquisingularEvidence, NotEquisingular, Degenerate };
  Verdict verdict = Verdict::Degenerate;
  std::vector<MilnorSequence> common_multiset;  // when EquisingularEvidence
  std::vector<FiberReport> witnesses;           // 1 for Degenerate, 2 for NotEquisingular
  std::vector<Stratum> strata;
  std::vector<FiberReport> fibers;  // every computed fiber, by ascending parameter
  unsigned long long min_milnor_sum = 0;
  bool semicontinuity_ok = false;  // every fiber's milnor_sum >= the minimum
  std::string note;                // fixed scope caveat, repeated in every report
};

// The caveat attached to every family verdict.
const std::string& family_report_note();

// Structural and on-fiber validation: shape of the spec, samples disjoint
// from exclusions, f(sigma(a), a) = 0 identically in the parameter, and all
// space partials vanishing at sigma(a) for every sampled a.
// errors: FamilyFormatError; SectionNotOnFiber.
void validate_family(const FamilySpec& family);

// Germ of the a-fiber at the given section: g(u) = f(sigma(a) + u, a).
// errors: ExcludedParameter; IndexOutOfRange; SectionNotOnFiber.
Polynomial specialize(const FamilySpec& family, const Rational& a, std::size_t section_index);

// Milnor sequence at every declared section of the a-fiber; non-isolated
// sections are marked rather than thrown.  milnor_sum is the total Milnor
// number when every section is isolated.
// errors: ExcludedParameter; InconclusiveResult names the failing section.
FiberReport fiber_report(const FamilySpec& family, const Rational& a, const SectionSamplingConfig& cfg);

// Whitney-equisingularity check over the sampled parameters by comparing the
// multiset of section Milnor sequences fiber by fiber.  Any fiber lacking
// full data (a non-isolated section, or an inconclusive computation) makes
// the verdict Degenerate.  Witness fibers, strata, and the milnor_sum
// semicontinuity audit are always populated.
// pre: parameter_samples nonempty.
FamilyVerdict whitney_check(const FamilySpec& family, const SectionSamplingConfig& cfg);

// The equisingular stratification alone: samples grouped by Milnor-sequence
// multiset, degenerate fibers collected in their own block, blocks ordered by
// first occurrence over the ascending samples.
// pre: parameter_samples nonempty.
std::vector<Stratum> stratify(const FamilySpec& family, const SectionSamplingConfig& cfg);

// Reads a family from a JSON document with fields: variables (array of
// strings), parameter (string), polynomial (string), sections (array of
// arrays of coordinate strings, polynomials in the parameter), samples and
// excluded (arrays of integers or exact rational strings; samples defaults
// to {-3,-1,0,1,3} minus exclusions).  Validates before returning.
// errors: FamilyFormatError; SyntaxError; UnknownVariable; SectionNotOnFiber.
FamilySpec parse_family(const std::string& json_text);
FamilySpec parse_family_file(const std::string& path);

}  // namespace germ
