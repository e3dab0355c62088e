// Expression parsing and canonical printing for sparse polynomials.
//
// Grammar (whitespace insignificant):
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' digits)?
//   atom   := digits | name | '(' expr ')'
// '^' binds tightest, then unary minus, then '*', then '+'/'-', so
// "-(1+z1)^2" parses as -((1+z1)^2) and "-z1^2" as -(z1^2). Exponents are
// decimal, non-negative, and must be < 2^16; coefficients are unbounded.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "chowbso/alphabet.hpp"
#include "chowbso/multipoly.hpp"

namespace chowbso {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at offset " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Variable names come from the alphabet; anything unrecognized is a
// ParseError naming the offending token and its position.
MultiPoly parse_poly(std::string_view text, const VariableAlphabet& alphabet);

// Canonical text form: terms in ascending total degree, ties broken by
// descending lexicographic order (z1 heaviest), factors joined with '*',
// exponents >= 2 written with '^', unit coefficients dropped. The output
// parses back to the same polynomial.
std::string format_poly(const MultiPoly& p, const VariableAlphabet& alphabet);

} // namespace chowbso
