#include "frobcx/closedform.hpp"

#include <string>
#include <vector>

#include "frobcx/errors.hpp"

namespace frobcx {
namespace {

void require_level_two(std::uint32_t e, const char* what) {
  if (e < 2) {
    throw InvalidArgument(std::string(what) + " is only defined for e >= 2");
  }
}

}  // namespace

Count c3_closed(Prime p, std::uint32_t e) {
  require_level_two(e, "c3_closed");
  const unsigned long q = p.value();
  Count numerator = power(p, e) * (q - 1) * (q - 1);
  Count tail;
  mpz_ui_pow_ui(tail.get_mpz_t(), q + 1, e - 2);
  numerator *= tail;
  if (!mpz_divisible_2exp_p(numerator.get_mpz_t(), e)) {
    throw InvariantViolation("c3_closed: numerator not divisible by 2^e");
  }
  Count out;
  mpz_fdiv_q_2exp(out.get_mpz_t(), numerator.get_mpz_t(), e);
  return out;
}

Rational cx_t_d3(Prime p) {
  Rational r(Count(p.value()) * (p.value() + 1), Count(2));
  r.canonicalize();
  return r;
}

Count xi_weight(Prime p, std::uint32_t e, const Count& i) {
  require_level_two(e, "xi_weight");
  const DigitVector c = digits(i, p, e);
  Count w = (p.value() - 1 - c.digits[e - 1]);
  for (std::uint32_t r = 1; r + 1 < e; ++r) w *= c.digits[r] + 1;
  w *= c.digits[0];
  return w;
}

Count lower_bound(Prime p, std::uint32_t d, std::uint32_t e,
                  const Count& max_terms) {
  require_level_two(e, "lower_bound");
  if (d < 3) throw InvalidArgument("lower_bound needs d >= 3");
  const Count terms = power(p, e);
  if (terms > max_terms) {
    throw GuardExceeded("lower_bound needs " + terms.get_str() +
                            " terms, guard is " + max_terms.get_str(),
                        terms.get_str(), max_terms.get_str());
  }
  const std::uint32_t q = p.value();
  // Odometer over the digits of i; binom(d-3+i, i) advances by the ratio
  // (d-2+i)/(i+1) as i increments.
  std::vector<std::uint32_t> digit(e, 0);
  Count binom = 1;
  Count total = 0;
  Count i = 0;
  for (;;) {
    if (digit[0] != 0 && digit[e - 1] != q - 1) {
      Count xi = q - 1 - digit[e - 1];
      for (std::uint32_t r = 1; r + 1 < e; ++r) xi *= digit[r] + 1;
      xi *= digit[0];
      total += xi * binom;
    }
    std::uint32_t pos = 0;
    while (pos < e && digit[pos] == q - 1) digit[pos++] = 0;
    if (pos == e) break;
    ++digit[pos];
    binom *= i + d - 2;
    mpz_divexact(binom.get_mpz_t(), binom.get_mpz_t(), Count(i + 1).get_mpz_t());
    ++i;
  }
  return total;
}

Count example24_sequence(std::uint32_t e) {
  Count a = 4;
  Count b = 0;
  for (std::uint32_t step = 0; step < e; ++step) {
    Count next_a = 6 * a + 4 * b;
    Count next_b = a + 4 * b;
    a = std::move(next_a);
    b = std::move(next_b);
  }
  return a;
}

LogInterval segre_cxf(Prime p, std::uint32_t d, const Rational& tol) {
  return cxf(p, d, tol).cxf;
}

std::optional<std::string> segre_closed_form(Prime p, std::uint32_t d) {
  const std::string base = "log_" + std::to_string(p.value());
  if (d == 3) return base + "(" + cx_t_d3(p).get_str() + ")";
  if (p.value() == 2 && d == 4) return base + "(5+sqrt(5))";
  return std::nullopt;
}

}  // namespace frobcx
