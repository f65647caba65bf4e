#pragma once

#include <string>
#include <vector>

#include "hypdeg/multipoly.hpp"
#include "hypdeg/unipoly.hpp"

namespace hypdeg {

/// Parses text such as "x1^2*x2 - 3*x3^3". Accepts x1..xm (x, y, z alias x1, x2, x3), integer
/// and rational literals, + - * ^ and parentheses. With nvars < 0 the count is the largest index seen.
/// Throws ParseError on malformed input or non-integral coefficients.
MultiPoly parse_multipoly(const std::string& text, int nvars = -1);

/// Parses a univariate polynomial in t (x is accepted as a synonym); rational coefficients allowed.
UniPoly parse_unipoly(const std::string& text);

/// Semicolon-separated list of univariate polynomials, e.g. "t^2-2;t;1".
std::vector<UniPoly> parse_unipoly_list(const std::string& text);

/// Comma-separated integers, e.g. "3,2".
std::vector<long> parse_int_list(const std::string& text);

}  // namespace hypdeg
