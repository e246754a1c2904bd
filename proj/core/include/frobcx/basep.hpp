#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "frobcx/count.hpp"

namespace frobcx {

/// The characteristic. Construction verifies primality by trial division.
class Prime {
 public:
  explicit Prime(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }
  operator std::uint32_t() const noexcept { return p_; }  // NOLINT

  friend bool operator==(Prime, Prime) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// p^e as an arbitrary-precision integer.
Count power(Prime p, std::uint64_t e);

/// Little-endian base-p digits: digits[n] is the coefficient of p^n.
struct DigitVector {
  Prime p;
  std::vector<std::uint32_t> digits;

  Count value() const;
  friend bool operator==(const DigitVector&, const DigitVector&) = default;
};

/// Exactly `len` base-p digits of a. Throws OverflowError if a >= p^len.
DigitVector digits(const Count& a, Prime p, std::size_t len);

/// a mod p^e1, the low e1 base-p digits of a.
Count truncate(const Count& a, Prime p, std::uint64_t e1);

/// Exponents (a_1, ..., a_d) of a monomial of degree p^e - 1.
class ExponentVector {
 public:
  /// Throws InvalidArgument unless every a_i >= 0, level >= 1 and
  /// a_1 + ... + a_d = p^level - 1.
  ExponentVector(std::vector<Count> a, Prime p, std::uint32_t level);

  Prime prime() const noexcept { return p_; }
  std::uint32_t level() const noexcept { return level_; }
  std::size_t size() const noexcept { return a_.size(); }
  std::span<const Count> exponents() const noexcept { return a_; }
  const Count& operator[](std::size_t i) const { return a_[i]; }

 private:
  std::vector<Count> a_;
  Prime p_;
  std::uint32_t level_;
};

/// Accumulated carries (d_0, ..., d_{e-1}) when adding a_1 + ... + a_d in
/// base p; d_n is the carry into the digit of p^{n+1}. The last entry is
/// always 0 because the sum is p^e - 1.
std::vector<Count> carry_sequence(const ExponentVector& v);

}  // namespace frobcx
