#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pfaff {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonicalized rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q" with q > 1, or "p" for integers.
std::string to_string(const Rational& value);

}  // namespace pfaff
