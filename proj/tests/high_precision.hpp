#pragma once

// 100-digit floating point reference values, independent of the library's
// rational logarithm routine.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "frobcx/count.hpp"

namespace frobcx::testing {

using Float100 = boost::multiprecision::cpp_bin_float_100;

inline Float100 to_float(const Rational& q) {
  return Float100(q.get_num().get_str()) / Float100(q.get_den().get_str());
}

inline Float100 log_base(double base, const Float100& x) {
  return boost::multiprecision::log(x) / boost::multiprecision::log(Float100(base));
}

/// Rounding slack of the reference values themselves; log(27)/log(3) comes
/// out a few ulps below 3.
inline const Float100 kSlack("1e-90");

/// lo <= x <= hi, with the comparison done at 100 digits.
inline bool interval_contains(const Rational& lo, const Rational& hi,
                              const Float100& x) {
  return to_float(lo) <= x + kSlack && x - kSlack <= to_float(hi);
}

}  // namespace frobcx::testing
