#pragma once

#include <string>
#include <string_view>

#include "frobcx/count.hpp"

namespace frobcx {

enum class Rounding { kDown, kUp };

/// Parses "7", "0.25", "1e-9", "2.5E+3" into an exact rational. Throws
/// InvalidArgument on anything else.
Rational parse_decimal(std::string_view text);

/// Fixed-point rendering with `digits` fractional digits, rounded toward
/// -inf (kDown) or +inf (kUp). Integers are printed without a fraction.
std::string format_decimal(const Rational& q, unsigned digits, Rounding mode);

/// Smallest k with 10^-k <= tol, i.e. ceil(-log10 tol), at least 0.
unsigned decimal_digits_for(const Rational& tol);

}  // namespace frobcx
