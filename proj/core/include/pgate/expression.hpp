#pragma once

// Literal syntax shared by the library and the command line:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/')? unary)*      juxtaposition multiplies
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' '-'? integer)?
//   primary := integer | identifier | '(' expr ')'
//
// The identifiers are the field variable (e.g. z) and, in polynomial
// context, the polynomial variable (t). Whitespace is insignificant.
// Division is only by nonzero constants and negative exponents only apply to
// constants.

#include <pgate/number_field.hpp>
#include <pgate/polynomial.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace pgate {

FieldElement parse_field_element(const FieldPtr& field, std::string_view text);

Polynomial parse_polynomial(const FieldPtr& field, std::string_view text,
                            const std::string& var = "t");

// A polynomial with rational coefficients in `var`, lowest degree first;
// used for minimal polynomials such as "z^3 + z - 1".
std::vector<Rational> parse_rational_polynomial(std::string_view text,
                                                const std::string& var);

// Builds a field from a variable name and a minimal polynomial expression.
FieldPtr parse_field(const std::string& variable, std::string_view min_poly);

}  // namespace pgate
