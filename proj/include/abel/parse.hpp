#pragma once

#include <string>

#include "abel/poly.hpp"

namespace abel {

// Parse a polynomial expression in the single variable t.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*' | adjacency) factor)*
//   factor := base ('^' uint)?
//   base   := uint | uint '/' uint | 't' | '(' expr ')' | '-' factor
//
// Implicit multiplication is accepted between a number or closing
// parenthesis and a following '(' or 't' (the input style "4(t-1)t(t+1)").
// '^' binds tighter than unary minus: -t^2 == -(t^2). Exponents must be
// nonnegative integer literals. Errors carry 1-based line/column.
Poly parse_poly(const std::string& text);

// Canonical descending-power form, e.g. "15*t^2 - 3"; parse(format(p)) == p.
// Never uses implicit multiplication. Zero prints as "0".
std::string format_poly(const Poly& p);

// Same, with a custom variable name (used for gamma polynomials in reports).
std::string format_poly(const Poly& p, const std::string& var);

// Human form of a Q(sqrt(D)) polynomial: "(a-part) + sqrt(D)*(b-part)".
std::string format_qpoly(const QPoly& p);

} // namespace abel
