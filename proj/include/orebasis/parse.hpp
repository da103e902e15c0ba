#pragma once

#include <string>

#include "orebasis/int_poly.hpp"

namespace orebasis {

/// Polynomial in x with integer coefficients, e.g. "x^4 + 2*x^2 - 4x + 2".
/// Whitespace is ignored and like terms are added. Throws ParseError with
/// the offset of the first offending character.
IntPoly parse_poly(const std::string& text);

}  // namespace orebasis
