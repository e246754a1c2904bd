#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace frobcx {

/// Arbitrary-precision nonnegative integer used for every count.
using Count = mpz_class;

/// Exact rational used by the spectral certificates.
using Rational = mpq_class;

/// binom(n, k) by the multiplicative formula with exact division.
/// Returns 0 when k > n.
Count binomial(const Count& n, std::uint64_t k);

/// Decimal rendering of a count.
inline std::string to_decimal(const Count& c) { return c.get_str(10); }

}  // namespace frobcx
