#include "frobcx/rational_io.hpp"

#include <regex>

#include "frobcx/errors.hpp"

namespace frobcx {
namespace {

Count pow10(unsigned long k) {
  Count r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

}  // namespace

Rational parse_decimal(std::string_view text) {
  static const std::regex kPattern(
      R"(^([0-9]+)(?:\.([0-9]*))?(?:[eE]([+-]?[0-9]{1,6}))?$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, kPattern)) {
    throw InvalidArgument("not a decimal number: '" + std::string(text) + "'");
  }
  const std::string whole = m[1].str();
  const std::string frac = m[2].matched ? m[2].str() : std::string();
  const long exponent = m[3].matched ? std::stol(m[3].str()) : 0;

  Count digits(whole + frac, 10);
  const long scale = exponent - static_cast<long>(frac.size());
  Rational q(digits);
  if (scale >= 0) {
    q *= pow10(static_cast<unsigned long>(scale));
  } else {
    q /= pow10(static_cast<unsigned long>(-scale));
  }
  q.canonicalize();
  return q;
}

std::string format_decimal(const Rational& q, unsigned digits, Rounding mode) {
  if (q.get_den() == 1) return q.get_num().get_str();
  const Count scale = pow10(digits);
  const Count scaled_num = q.get_num() * scale;
  Count fixed;
  if (mode == Rounding::kDown) {
    mpz_fdiv_q(fixed.get_mpz_t(), scaled_num.get_mpz_t(),
               q.get_den().get_mpz_t());
  } else {
    mpz_cdiv_q(fixed.get_mpz_t(), scaled_num.get_mpz_t(),
               q.get_den().get_mpz_t());
  }
  const bool negative = fixed < 0;
  std::string body = Count(abs(fixed)).get_str();
  if (digits == 0) return (negative ? "-" : "") + body;
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  return (negative ? "-" : "") + body;
}

unsigned decimal_digits_for(const Rational& tol) {
  if (tol <= 0) throw InvalidArgument("tolerance must be positive");
  unsigned k = 0;
  Rational step = 1;
  while (step > tol) {
    step /= 10;
    ++k;
  }
  return k;
}

}  // namespace frobcx
