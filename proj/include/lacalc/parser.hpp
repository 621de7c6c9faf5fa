#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lacalc/coeff.hpp"
#include "lacalc/exterior.hpp"

namespace lacalc {

// Expression grammar (no implicit multiplication):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/' | '/\') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' digits)*
//   primary := digits | name | '(' expr ')'
//
// Names are coordinates (degree 0) or, for exterior elements, frame
// generators (degree 1). `*` and `/` need a scalar on one side (`/` on the
// right), `^` a scalar base; `/\` is the wedge product.

/// Parses a coefficient over the coordinates `vars`.
Coeff parseExpr(std::string_view src, const std::vector<std::string>& vars);

/// Parses a multivector over the frame names, e.g. `(x^2)/\e1/\e2`.
Multivector parseMultivector(std::string_view src, const std::vector<std::string>& vars,
                             const std::vector<std::string>& frame);

/// Parses a form over the coframe names, e.g. `x*a1 - a1/\a2`.
Form parseForm(std::string_view src, const std::vector<std::string>& vars,
               const std::vector<std::string>& coframe);

/// Checks an identifier list: valid names, no duplicates across lists.
void checkNames(const std::vector<std::vector<std::string>>& lists);

}  // namespace lacalc
