#pragma once

#include "cdga/dga.hpp"

#include <string>

namespace cdga {

// Line-oriented model files; the single bit-exact text interface.
//
//   # comment
//   gen a 1
//   gen b 1
//   gen c 1
//   d a = 0
//   d b = 0
//   d c = -a*b
//
// Grammar:
//   gendecl  := "gen" IDENT NAT
//   diffdecl := "d" IDENT "=" expr
//   expr     := ["-"] term (("+"|"-") term)*        ("0" is the zero constant)
//   term     := coeff | [coeff "*"] IDENT ("^" NAT)? ("*" IDENT ("^" NAT)?)*
//   coeff    := ["-"] NAT ["/" NAT]
//   IDENT    := letter (letter|digit|"_")*
//
// A "^" exponent of 2 or more on an odd-degree generator is a syntax error;
// write the product out (it normalizes to zero) if that is what you mean.
//
// Generators must be declared before use; every generator needs exactly one
// `d` line. Newline-agnostic, UTF-8. Errors carry line and column; no partial
// Dga is ever returned.
Dga parse_model(const std::string& text);

Element parse_element(const Algebra& alg, const std::string& expr);
Element parse_element(const Dga& dga, const std::string& expr);

// Canonical rendering: terms in monomial order, coefficients as integers or
// "p/q" in lowest terms, factors joined by "*", even powers as "^k"; zero is
// "0". parse_element(render(u)) == u for every Element.
std::string render(const Element& u);

}  // namespace cdga
