#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "polynomial.hpp"

namespace varembed {

// Grammar (whitespace insignificant):
//   expr   := ["-"] term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := base ("^" uint)?
//   base   := int | int "/" uint | ident | "(" expr ")"
//   ident  := [A-Za-z][A-Za-z0-9_]*
// Implicit multiplication is rejected.  Syntax errors raise ParseError with
// 1-based line/column; identifiers absent from an explicit context raise
// UnknownVariable.
Polynomial parse_polynomial(std::string_view text, VarContextPtr ctx);

// Same grammar; the context is collected from identifiers in order of first
// appearance.
Polynomial parse_polynomial(std::string_view text);

// Canonical form: terms in descending graded-lex order, " + "/" - "
// separators, unit coefficients elided, factors as name or name^exp joined
// with "*", rationals as num/den.  parse(format(p)) == p.
std::string format_polynomial(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace varembed
