// Exception types shared across the library.  Every throwing path uses one of
// these so callers (and the CLI exit-code mapping) can dispatch on type.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace germ {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- parsing ---------------------------------------------------------------

struct SyntaxError : Error {
  std::size_t position;
  SyntaxError(std::size_t pos, const std::string& expected)
      : Error("syntax error at position " + std::to_string(pos) + ": expected " + expected),
        position(pos) {}
};

struct UnknownVariable : Error {
  std::string name;
  explicit UnknownVariable(const std::string& n)
      : Error("unknown variable '" + n + "'"), name(n) {}
};

// --- polynomial operations --------------------------------------------------

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct ZeroPolynomial : Error {
  ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct ConstantTermPresent : Error {
  ConstantTermPresent() : Error("germ must vanish at the origin (nonzero constant term)") {}
};

// --- local algebra ----------------------------------------------------------

struct EmptyGenerators : Error {
  EmptyGenerators() : Error("ideal needs at least one nonzero generator") {}
};

// --- Milnor invariants ------------------------------------------------------

struct NonIntegerResult : Error {
  NonIntegerResult() : Error("weight formula did not produce a nonnegative integer") {}
  explicit NonIntegerResult(const std::string& what) : Error(what) {}
};

struct NonIsolatedInput : Error {
  NonIsolatedInput() : Error("germ is not an isolated singularity") {}
};

// A computation hit its degree cap without resolving; carries the cap used.
struct InconclusiveResult : Error {
  unsigned degree_cap;
  explicit InconclusiveResult(unsigned cap)
      : Error("inconclusive at degree cap " + std::to_string(cap)), degree_cap(cap) {}
  InconclusiveResult(unsigned cap, const std::string& where)
      : Error("inconclusive at degree cap " + std::to_string(cap) + " (" + where + ")"),
        degree_cap(cap) {}
};

struct AllSamplesInconclusive : Error {
  AllSamplesInconclusive() : Error("no sampled plane produced a finite Milnor number") {}
};

// --- classification ---------------------------------------------------------

struct OrderOne : Error {
  OrderOne() : Error("germ is smooth (order 1); no singularity data") {}
};

struct SplitFailure : Error {
  SplitFailure() : Error("quadratic splitting did not settle within its pivot bound") {}
  explicit SplitFailure(const std::string& what) : Error(what) {}
};

struct SliceDisagreement : Error {
  SliceDisagreement() : Error("hyperplane slices of minimal Milnor number disagree on the surface type") {}
  explicit SliceDisagreement(const std::string& what) : Error(what) {}
};

// --- families ---------------------------------------------------------------

struct ExcludedParameter : Error {
  explicit ExcludedParameter(const std::string& value)
      : Error("parameter value " + value + " is excluded from this family") {}
};

struct SectionNotOnFiber : Error {
  explicit SectionNotOnFiber(const std::string& what) : Error(what) {}
};

struct FamilyFormatError : Error {
  explicit FamilyFormatError(const std::string& what) : Error(what) {}
};

}  // namespace germ
