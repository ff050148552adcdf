#pragma once

// Numeric expressions for command-line values: numbers, pi, e, + - * / ^,
// parentheses, the usual elementary functions, implicit multiplication
// ("2asinh0.5" is 2 asinh(0.5)) and a degree suffix ("45d", "45deg").

#include <string>

namespace hypkit {

enum class AngleUnit { rad, deg };

/// Throws DomainError with the offending position on malformed input.
double evaluate_expression(const std::string& text);

/// As evaluate_expression, in radians; a bare number is read in `unit`.
double evaluate_angle(const std::string& text, AngleUnit unit);

}  // namespace hypkit
