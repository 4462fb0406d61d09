#ifndef FREESTAR_PARSER_HPP
#define FREESTAR_PARSER_HPP

#include <string>

#include "freestar/poly.hpp"

namespace freestar {

// Syntax error with the offending input position.
struct ParseError : std::runtime_error {
  size_t position;
  ParseError(size_t pos, const std::string& msg)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Grammar (whitespace ignored, juxtaposition is not multiplication):
//   expr   := term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ["'"] ["^" nat] ["'"]     (at most one involution mark)
//   atom   := rational | "i" | var | "(" expr ")"
//   var    := "x" nat ;  rational := ["-"] nat ["/" nat]
Polynomial parse_poly(const std::string& s, int g, FieldMode field);

// Scalar literal = degree-0 expression.
Scalar parse_scalar(const std::string& s, FieldMode field);

// Terms in descending monomial order, fractions reduced; round-trips
// through parse_poly.
std::string format_poly(const Polynomial& p);

std::string format_scalar(const Scalar& c);

}  // namespace freestar

#endif
