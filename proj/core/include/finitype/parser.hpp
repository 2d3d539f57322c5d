#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "finitype/polynomial.hpp"

namespace finitype {

/// Recursive-descent parser for the expression language
///
///   expr   := term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := base ("^" natural)?
///   base   := rational | "i" | "z"k | "zb"k | "Re(" expr ")" | "Im(" expr ")"
///           | "|" expr "|^" even | "(" expr ")"
///
/// Whitespace is ignored. `|e|^2m` expands to (e·ē)^m, `Re(e)` to (e+ē)/2 and
/// `Im(e)` to (e−ē)/(2i). A term may also start with a unary minus.
/// Errors throw ParseError carrying the byte offset.
Poly parse_expression(std::string_view text, std::size_t n);

/// Parses and checks Hermitian symmetry ("not real-valued" otherwise).
RealPoly parse_poly(std::string_view text, std::size_t n);
HoloPoly parse_holo_poly(std::string_view text, std::size_t n);

/// A constant expression such as "1/2", "-i" or "(1 + 2*i)/3".
GaussianRational parse_scalar(std::string_view text);

/// "(a, b, ...)" with constant-expression coordinates; must have n entries.
Point parse_point(std::string_view text, std::size_t n);

/// Univariate holomorphic polynomial in `symbol` (default "t"), returned as
/// dense coefficients, index = power.
std::vector<GaussianRational> parse_univariate(std::string_view text, std::string_view symbol = "t");

/// Largest k such that z_k or zb_k occurs (0 if none). Does not validate.
std::size_t max_variable_index(std::string_view text);

}  // namespace finitype
