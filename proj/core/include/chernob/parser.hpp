#pragma once

#include <span>
#include <string>
#include <string_view>

#include "chernob/oneform.hpp"
#include "chernob/polynomial.hpp"

namespace chernob {

// Recursive-descent parsers for the textual polynomial and 1-form
// grammars:
//
//   poly    := ["-"] term (("+"|"-") term)*
//   term    := factor ("*" factor)*
//   factor  := rational | variable ("^" natural)? | "(" poly ")"
//   rational:= natural ("/" natural)?
//   oneform := ["-"] fterm (("+"|"-") fterm)*
//   fterm   := (factor "*")* "d" variable
//
// Products require an explicit '*'; whitespace is insignificant.
// Variable names must not collide with differentials: a name "d<v>"
// where <v> is another declared variable is rejected.

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> variables);

OneForm parse_one_form(std::string_view text, std::span<const std::string> variables);

}  // namespace chernob
