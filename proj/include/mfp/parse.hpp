#ifndef MFP_PARSE_HPP
#define MFP_PARSE_HPP

// Text syntax for polynomials and ideal files.
//
//   vars: x, y          <- header, first non-comment line
//   y^2 - x^2 - x^3     <- one generator per non-empty line
//   # comment
//
// Terms are rational coefficients (integer or a/b), variables and "^" powers;
// "*" between factors is optional and parentheses nest.

#include <string>
#include <string_view>

#include "mfp/ideal.hpp"

namespace mfp {

/// Parses a polynomial over `ring`. `line` is used for error positions.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, int line = 1);

/// Throws ParseError (SyntaxError, UnknownVariable, ZeroPolynomialLine).
IdealPresentation parse_ideal(std::string_view text);

/// Inverse of parse_ideal: header plus one generator per line.
std::string format_ideal(const IdealPresentation& I);

/// "c1,...,cn" with rational entries.
RationalPoint parse_point(std::string_view text);

}  // namespace mfp

#endif
