#include "frobcx/enumerate.hpp"

#include <atomic>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "frobcx/errors.hpp"

namespace frobcx {
namespace {

// Powers p^0 .. p^e in machine words. Throws if p^e does not fit in 62 bits.
std::vector<std::uint64_t> word_powers(Prime p, std::uint32_t e) {
  std::vector<std::uint64_t> pw(e + 1, 1);
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
  for (std::uint32_t i = 1; i <= e; ++i) {
    if (pw[i - 1] > kLimit / p.value()) {
      throw GuardExceeded("p^e does not fit in a machine word",
                          power(p, e).get_str(), std::to_string(kLimit));
    }
    pw[i] = pw[i - 1] * p.value();
  }
  return pw;
}

// Truncation test on the first d-1 coordinates of `a`.
bool passes(const std::vector<std::uint64_t>& a,
            const std::vector<std::uint64_t>& pw, std::uint32_t e) {
  const std::size_t tested = a.size() - 1;
  for (std::uint32_t e1 = 1; e1 < e; ++e1) {
    const std::uint64_t modulus = pw[e1];
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < tested && sum < modulus; ++i) {
      sum += a[i] % modulus;
    }
    if (sum < modulus) return false;
  }
  return true;
}

// Counts passing compositions with a[0] = a1; the middle coordinates run
// through an odometer and a[d-1] holds the slack.
std::uint64_t count_leading(std::uint64_t a1, std::uint32_t d,
                            const std::vector<std::uint64_t>& pw,
                            std::uint32_t e) {
  const std::uint64_t total = pw[e] - 1;
  std::vector<std::uint64_t> a(d, 0);
  a[0] = a1;
  a[d - 1] = total - a1;
  std::uint64_t found = 0;
  for (;;) {
    if (passes(a, pw, e)) ++found;
    std::size_t i = 1;
    while (i + 1 < d) {
      if (a[d - 1] > 0) {
        ++a[i];
        --a[d - 1];
        break;
      }
      a[d - 1] += a[i];
      a[i] = 0;
      ++i;
    }
    if (i + 1 >= d) break;
  }
  return found;
}

void check_shape(std::uint32_t d, std::uint32_t e) {
  if (d < 1) throw InvalidArgument("d must be >= 1");
  if (e < 1) throw InvalidArgument("e must be >= 1");
}

}  // namespace

bool is_basis_monomial(const ExponentVector& v, BasisVariant variant) {
  const Prime p = v.prime();
  const std::size_t tested =
      variant == BasisVariant::kAllD ? v.size() : v.size() - 1;
  for (std::uint32_t e1 = 1; e1 < v.level(); ++e1) {
    Count sum = 0;
    for (std::size_t i = 0; i < tested; ++i) sum += truncate(v[i], p, e1);
    if (sum < power(p, e1)) return false;
  }
  return true;
}

Count composition_count(Prime p, std::uint32_t d, std::uint32_t e) {
  check_shape(d, e);
  return binomial(power(p, e) - 2 + d, d - 1);
}

Count count_basis_with_leading(Prime p, std::uint32_t d, std::uint32_t e,
                               std::uint64_t a1) {
  check_shape(d, e);
  if (d == 1) return e == 1 && Count(static_cast<unsigned long>(a1)) == power(p, e) - 1 ? 1 : 0;
  const auto pw = word_powers(p, e);
  if (a1 >= pw[e]) return 0;
  return Count(static_cast<unsigned long>(count_leading(a1, d, pw, e)));
}

Count count_basis_enumeration(Prime p, std::uint32_t d, std::uint32_t e,
                              const EnumerationOptions& options) {
  check_shape(d, e);
  const Count size = composition_count(p, d, e);
  if (size > options.max_compositions) {
    throw GuardExceeded("enumeration needs " + size.get_str() +
                            " compositions, guard is " +
                            options.max_compositions.get_str(),
                        size.get_str(), options.max_compositions.get_str());
  }
  // A single part: the only monomial is x^{p^e-1}, whose empty truncation
  // sums never reach p^e1.
  if (d == 1) return e == 1 ? 1 : 0;

  const auto pw = word_powers(p, e);
  const std::uint64_t leading_values = pw[e];
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (leading_values < threads) threads = static_cast<unsigned>(leading_values);

  std::atomic<std::uint64_t> next{0};
  std::vector<std::uint64_t> partial(threads, 0);
  auto work = [&](unsigned slot) {
    std::uint64_t local = 0;
    for (std::uint64_t a1 = next.fetch_add(1); a1 < leading_values;
         a1 = next.fetch_add(1)) {
      local += count_leading(a1, d, pw, e);
    }
    partial[slot] = local;
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  Count total = 0;
  for (auto n : partial) total += static_cast<unsigned long>(n);
  return total;
}

Count carry_vector_count(std::uint32_t d, std::uint32_t e) {
  check_shape(d, e);
  if (e == 1) return 1;
  if (d < 3) return 0;
  Count r;
  mpz_ui_pow_ui(r.get_mpz_t(), d - 2, e - 1);
  return r;
}

Count count_basis_carryvectors(const PoincareTable& table, std::uint32_t e,
                               const Count& max_carry_vectors) {
  const std::uint32_t d = table.dimension();
  check_shape(d, e);
  const Count size = carry_vector_count(d, e);
  if (size > max_carry_vectors) {
    throw GuardExceeded("carry-vector sum needs " + size.get_str() +
                            " terms, guard is " + max_carry_vectors.get_str(),
                        size.get_str(), max_carry_vectors.get_str());
  }
  if (size == 0) return 0;

  const std::int64_t p = table.prime().value();
  // carries[n] = d_n for n = 0 .. e-2; d_{-1} = d_{e-1} = 0 are implicit.
  std::vector<std::int64_t> carries(e - 1, 1);
  const std::int64_t top = static_cast<std::int64_t>(d) - 2;
  Count total = 0;
  Count term;
  for (;;) {
    term = 1;
    std::int64_t below = 0;
    for (std::uint32_t n = 0; n < e && term != 0; ++n) {
      const std::int64_t here = n + 1 < e ? carries[n] : 0;
      term *= table.md(p * here - below + p - 1);
      below = here;
    }
    total += term;
    std::size_t i = 0;
    while (i < carries.size() && carries[i] == top) carries[i++] = 1;
    if (i == carries.size()) break;
    ++carries[i];
  }
  return total;
}

}  // namespace frobcx
