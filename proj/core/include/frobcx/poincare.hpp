#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "frobcx/basep.hpp"
#include "frobcx/count.hpp"

namespace frobcx {

/// Coefficients M_d(m) of (1 + t + ... + t^{p-1})^d, i.e. the number of
/// vectors in [0, p-1]^d with coordinate sum m. Immutable once built.
class PoincareTable {
 public:
  /// Throws InvalidArgument for d == 0.
  PoincareTable(Prime p, std::uint32_t d);

  Prime prime() const noexcept { return p_; }
  std::uint32_t dimension() const noexcept { return d_; }

  /// Largest index with a nonzero coefficient, d(p-1).
  std::int64_t top_degree() const noexcept {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }

  std::span<const Count> coefficients() const noexcept { return coeffs_; }

  /// M_d(m); zero outside [0, d(p-1)].
  const Count& md(std::int64_t m) const noexcept;

 private:
  Prime p_;
  std::uint32_t d_;
  std::vector<Count> coeffs_;
};

inline PoincareTable build_table(Prime p, std::uint32_t d) {
  return PoincareTable(p, d);
}

}  // namespace frobcx
