#include "frobcx/basep.hpp"

#include <string>

#include "frobcx/errors.hpp"

namespace frobcx {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw InvalidArgument(std::to_string(p) + " is not prime");
  }
}

Count power(Prime p, std::uint64_t e) {
  Count r;
  mpz_ui_pow_ui(r.get_mpz_t(), p.value(), e);
  return r;
}

Count DigitVector::value() const {
  Count r = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    r = r * p.value() + *it;
  }
  return r;
}

DigitVector digits(const Count& a, Prime p, std::size_t len) {
  if (a < 0) throw InvalidArgument("digits: negative value");
  if (a >= power(p, len)) {
    throw OverflowError(a.get_str() + " does not fit in " +
                        std::to_string(len) + " base-" +
                        std::to_string(p.value()) + " digits");
  }
  DigitVector out{p, std::vector<std::uint32_t>(len, 0)};
  Count rest = a;
  for (std::size_t n = 0; n < len && rest != 0; ++n) {
    out.digits[n] = static_cast<std::uint32_t>(
        mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p.value()));
  }
  return out;
}

Count truncate(const Count& a, Prime p, std::uint64_t e1) {
  if (a < 0) throw InvalidArgument("truncate: negative value");
  Count r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), power(p, e1).get_mpz_t());
  return r;
}

ExponentVector::ExponentVector(std::vector<Count> a, Prime p,
                               std::uint32_t level)
    : a_(std::move(a)), p_(p), level_(level) {
  if (level_ < 1) throw InvalidArgument("ExponentVector: level must be >= 1");
  if (a_.empty()) throw InvalidArgument("ExponentVector: no exponents");
  Count sum = 0;
  for (const auto& x : a_) {
    if (x < 0) throw InvalidArgument("ExponentVector: negative exponent");
    sum += x;
  }
  if (sum != power(p_, level_) - 1) {
    throw InvalidArgument("ExponentVector: exponents sum to " + sum.get_str() +
                          ", expected p^e - 1");
  }
}

std::vector<Count> carry_sequence(const ExponentVector& v) {
  const Prime p = v.prime();
  const std::uint32_t e = v.level();
  std::vector<DigitVector> expansions;
  expansions.reserve(v.size());
  for (const auto& a : v.exponents()) expansions.push_back(digits(a, p, e));

  std::vector<Count> carries(e);
  Count previous = 0;
  for (std::uint32_t n = 0; n < e; ++n) {
    Count column = 0;
    for (const auto& ds : expansions) column += ds.digits[n];
    // column = d_n * p - d_{n-1} + (p - 1)
    Count shifted = column + previous - (p.value() - 1);
    if (shifted < 0 || !mpz_divisible_ui_p(shifted.get_mpz_t(), p.value())) {
      throw InvariantViolation("carry_sequence: digit column " +
                               std::to_string(n) + " is inconsistent");
    }
    carries[n] = shifted / p.value();
    previous = carries[n];
  }
  if (carries.back() != 0) {
    throw InvariantViolation("carry_sequence: nonzero final carry");
  }
  return carries;
}

}  // namespace frobcx
