#pragma once

// JSON input documents for the command line. A document looks like
//
//   {
//     "name": "example31",
//     "field": {"variable": "z", "min_poly": "z^3 + z - 1"},
//     "polynomial": "t^10 + (-2*z^2 - 3*z - 7)*t^9 + ...",
//     "meridian_trace": "+2",
//     "expected": {"verdict": "CONSISTENT", "f": "..."}
//   }
//
// or carries "group" (presentation grammar) and "representation" (generator
// name -> [[a, b], [c, d]] of field-element strings) instead of
// "polynomial". "field" defaults to Q.

#include <pgate/number_field.hpp>
#include <pgate/polynomial.hpp>
#include <pgate/presentation.hpp>
#include <pgate/sl2.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace pgate::cli {

struct Expected {
  std::optional<std::string> verdict;
  std::optional<std::string> f;
  std::optional<std::string> torsion;
  std::optional<std::string> factorization;
};

struct InputDocument {
  std::string name;
  FieldPtr field;
  std::string field_variable;
  std::optional<GroupPresentation> group;
  std::optional<Representation> representation;
  std::optional<Polynomial> polynomial;
  // Generator whose column is deleted in the Wada matrix.
  std::optional<int> delete_column;
  // Which lift the supplied torsion polynomial belongs to.
  std::optional<MeridianTrace> meridian_trace;
  Expected expected;
};

// Throws ParseError for malformed JSON or expressions and ValidationError
// for well-formed but inconsistent documents.
InputDocument parse_input(std::string_view json_text, std::string default_name = "");

}  // namespace pgate::cli
