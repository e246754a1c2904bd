#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobcx/basep.hpp"
#include "frobcx/count.hpp"
#include "frobcx/matrix.hpp"
#include "frobcx/poincare.hpp"

namespace frobcx {

/// Carry-state recursion for T(R[x_1..x_d]). States are indexed by the
/// carry i = 1 .. d-2 (stored at i-1):
///   U[i][j]    = M_d(p i - j + p - 1)
///   x0[i]      = M_d(p i + p - 1)
///   weights[i] = M_d(p - i - 1)
/// so that c_{d,e} = weights . U^{e-2} x0 for e >= 2.
struct TransferSystem {
  Prime p;
  std::uint32_t d;
  CountMatrix U;
  std::vector<Count> x0;
  std::vector<Count> weights;
};

/// Throws InvalidArgument for d < 3; the matrix would be empty and
/// c_{d,e} vanishes for e >= 2 anyway.
TransferSystem build_system(const PoincareTable& table);
TransferSystem build_system(Prime p, std::uint32_t d);

/// U^e x0, by e matrix-vector products.
std::vector<Count> state(const TransferSystem& sys, std::uint32_t e);

/// c_{d,1} = binom(d + p - 2, p - 1).
Count first_level_count(Prime p, std::uint32_t d);

/// c_{d,e} for any d >= 1 and e >= 0.
Count c_de(Prime p, std::uint32_t d, std::uint32_t e);

/// c_e and k_e = c_1 + ... + c_e for e = 0 .. emax, tagged with the engine
/// that produced them.
struct ComplexityReport {
  Prime p;
  std::uint32_t d;
  std::string engine;
  std::vector<Count> c;
  std::vector<Count> k;

  /// Builds k from c. Throws InvariantViolation if c is empty, c[0] != 0 or
  /// some c[e] is negative.
  static ComplexityReport from_counts(Prime p, std::uint32_t d,
                                      std::string engine,
                                      std::vector<Count> c);
};

ComplexityReport complexity_sequence(Prime p, std::uint32_t d,
                                     std::uint32_t emax);

/// Same as above but driven by an explicit system, so callers can run the
/// recursion on a modified U.
ComplexityReport complexity_sequence(const TransferSystem& sys,
                                     std::uint32_t emax);

}  // namespace frobcx
