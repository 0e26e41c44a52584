#pragma once

#include <string>

#include "stringy/expr.hpp"

namespace stringy {

// Renders sums of c*u^p*v^q with exact fractional exponents, e.g.
//   "(uv)^1/2 + uv - 2*u^2*v"
// and quotients as "(poly) / (((uv)^a - 1)*((uv)^b - 1))".
std::string to_string(const FracPoly& poly);
std::string to_string(const RationalExpr& expr);

// Round-trip parsers for the same syntax; throw ParseError.
FracPoly parse_fracpoly(const std::string& text);
RationalExpr parse_rational_expr(const std::string& text);

}  // namespace stringy
