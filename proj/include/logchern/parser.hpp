#pragma once

/**
 * @file parser.hpp
 * @brief Text front end for polynomials.
 *
 * Accepted syntax: integer or `int/int` coefficients, named variables,
 * `+ - * ^`, parentheses, and implicit multiplication before a variable or
 * an opening parenthesis (`3x^2`, `2(x+y)`). Exponents are non-negative
 * integer literals. Division is only meaningful inside a rational literal.
 */

#include <string>
#include <string_view>
#include <vector>

#include "logchern/multipoly.hpp"

namespace logchern {

/// Throws ParseError (with byte position) on syntax errors and unknown variables.
MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars);

/// The homogeneous coordinate names used by the curve tools.
const std::vector<std::string>& xyz_vars();
/// Affine chart names (z = 1).
const std::vector<std::string>& xy_vars();

}  // namespace logchern
