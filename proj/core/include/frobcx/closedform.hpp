#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "frobcx/basep.hpp"
#include "frobcx/count.hpp"
#include "frobcx/spectral.hpp"

namespace frobcx {

/// c_{3,e} = p^e (p-1)^2 (p+1)^{e-2} / 2^e for e >= 2.
Count c3_closed(Prime p, std::uint32_t e);

/// cx(T(R[x,y,z])) = p(p+1)/2.
Rational cx_t_d3(Prime p);

/// xi_e(i) = (p-1-c_{e-1}) (c_{e-2}+1) ... (c_1+1) c_0 where
/// i = c_{e-1} ... c_0 in base p. Requires e >= 2 and 0 <= i < p^e.
Count xi_weight(Prime p, std::uint32_t e, const Count& i);

/// sum_{i < p^e} xi_e(i) binom(d-3+i, i), a lower bound for c_{d,e}
/// (exact for d = 3). Requires d >= 3, e >= 2 and p^e <= max_terms.
Count lower_bound(Prime p, std::uint32_t d, std::uint32_t e,
                  const Count& max_terms = 100'000'000);

/// A_e for p = 2, d = 4: A_{e+1} = 6A_e + 4B_e, B_{e+1} = A_e + 4B_e,
/// starting from (A_0, B_0) = (4, 0).
Count example24_sequence(std::uint32_t e);

/// Interval for cx_F(S_d) = log_p rho(U(p, d)).
LogInterval segre_cxf(Prime p, std::uint32_t d, const Rational& tol);

/// Exact form of cx_F(S_d) where one is known: d = 3 for every p, and
/// (p, d) = (2, 4). Rendered as e.g. "log_3(6)" or "log_2(5+sqrt(5))".
std::optional<std::string> segre_closed_form(Prime p, std::uint32_t d);

}  // namespace frobcx
