#pragma once

#include <cstdint>

#include "frobcx/basep.hpp"
#include "frobcx/count.hpp"
#include "frobcx/poincare.hpp"

namespace frobcx {

/// Which coordinates enter the truncation-sum test. Both give the same
/// answer for every monomial of degree p^e - 1.
enum class BasisVariant { kFirstDMinus1, kAllD };

/// True iff x^a survives in T_e modulo the part generated in lower degrees:
/// for every 1 <= e1 < e the chosen truncation sums reach p^e1.
bool is_basis_monomial(const ExponentVector& v,
                       BasisVariant variant = BasisVariant::kFirstDMinus1);

/// Number of compositions of p^e - 1 into d parts, binom(p^e - 2 + d, d - 1).
Count composition_count(Prime p, std::uint32_t d, std::uint32_t e);

struct EnumerationOptions {
  Count max_compositions = 100'000'000;
  /// 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// c_{d,e} by walking every composition of p^e - 1 into d parts.
/// Throws GuardExceeded when composition_count exceeds the guard.
Count count_basis_enumeration(Prime p, std::uint32_t d, std::uint32_t e,
                              const EnumerationOptions& options = {});

/// The share of count_basis_enumeration with first exponent a_1 fixed.
/// Summing over a_1 = 0 .. p^e - 1 gives the full count.
Count count_basis_with_leading(Prime p, std::uint32_t d, std::uint32_t e,
                               std::uint64_t a1);

/// Number of interior carry vectors, (d - 2)^(e - 1), or 0 if d < 3 and
/// e >= 2.
Count carry_vector_count(std::uint32_t d, std::uint32_t e);

/// c_{d,e} as a sum over carry vectors (d_{e-2}, ..., d_0) in [1, d-2]^{e-1}
/// of prod_n M_d(p d_n - d_{n-1} + p - 1), with d_{-1} = d_{e-1} = 0.
/// Valid for every d >= 1 and e >= 1. Throws GuardExceeded when
/// carry_vector_count exceeds max_carry_vectors.
Count count_basis_carryvectors(const PoincareTable& table, std::uint32_t e,
                               const Count& max_carry_vectors = 10'000'000);

}  // namespace frobcx
