// Recursive-descent parser for the polynomial expression grammar:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := coeff | var ('^' nat)? | '(' expr ')' ('^' nat)? | '-' factor
//   coeff  := nat ('/' nat)?
//
// Whitespace-insensitive; implicit multiplication is not allowed.
#pragma once

#include <string>
#include <vector>

#include "germ/polynomial.hpp"

namespace germ {

// Every identifier in `text` must be one of `variables` (UnknownVariable otherwise).
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables);

// Identifiers in order of first appearance; used by the CLI to infer variables.
std::vector<std::string> scan_variables(const std::string& text);

}  // namespace germ
