#pragma once
#include "jetgeom/expr.hpp"

namespace jetgeom {

// Expression grammar (whitespace insignificant):
//   expr    := term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := ('+'|'-')* power
//   power   := atom ('^' integer)?
//   atom    := number | 'i' | coordinate | ('sin'|'cos') '(' angle ')' | '(' expr ')'
//   number  := decimal rational, e.g. 3, 1/2 is written 1/2 via '/', 0.25 also accepted
// Identifiers: [a-zA-Z_][a-zA-Z0-9_]*; 'i' is the imaginary unit.
// Throws ParseError (with byte offset) on malformed input, StructureError on
// unknown identifiers or misuse of angle coordinates.
ScalarExpr parse(const std::string& text, ChartPtr chart);

} // namespace jetgeom
