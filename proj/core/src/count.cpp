#include "frobcx/count.hpp"

#include "frobcx/errors.hpp"

namespace frobcx {

Count binomial(const Count& n, std::uint64_t k) {
  if (n < 0) throw InvalidArgument("binomial: negative n");
  if (Count(k) > n) return 0;
  Count result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    // result is now binom(n-k+i, i) * i, always divisible by i
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i);
  }
  return result;
}

}  // namespace frobcx
