#pragma once

#include <string_view>

#include "betaexp/numeric.hpp"

namespace betaexp {

/// Evaluates a rational expression in beta exactly, e.g. "1/(2*beta)" or
/// "beta^2 - 3/2". Supports + - * / ^ (integer exponents), parentheses, decimal
/// literals and the names `beta` / `b`. Throws ParseError, DivisionByZero.
FieldValue evaluate_expression(std::string_view text, const Beta& beta);

}  // namespace betaexp
