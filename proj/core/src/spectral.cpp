#include "frobcx/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frobcx/errors.hpp"
#include "frobcx/rational_io.hpp"
#include "frobcx/transfer.hpp"

namespace frobcx {
namespace {

using RationalPoly = std::vector<Rational>;  // ascending

void trim(RationalPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

RationalPoly derivative(const RationalPoly& f) {
  RationalPoly out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * Rational(i));
  trim(out);
  return out;
}

// Remainder and quotient of f / g; g must be nonzero.
RationalPoly divide(RationalPoly f, const RationalPoly& g,
                    RationalPoly* quotient = nullptr) {
  trim(f);
  RationalPoly q(f.size() >= g.size() ? f.size() - g.size() + 1 : 0);
  while (f.size() >= g.size() && !f.empty()) {
    const std::size_t shift = f.size() - g.size();
    const Rational factor = f.back() / g.back();
    q[shift] = factor;
    for (std::size_t i = 0; i < g.size(); ++i) f[i + shift] -= factor * g[i];
    f.pop_back();
    trim(f);
  }
  if (quotient) {
    trim(q);
    *quotient = std::move(q);
  }
  return f;
}

RationalPoly gcd(RationalPoly a, RationalPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RationalPoly r = divide(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Rational eval(const RationalPoly& f, const Rational& x) {
  Rational acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<RationalPoly> sturm_chain(const CharPoly& poly) {
  RationalPoly f;
  for (const auto& c : poly.coefficients()) f.emplace_back(c);
  // Square-free part, so the chain counts distinct roots on (a, b].
  const RationalPoly g = gcd(f, derivative(f));
  if (g.size() > 1) {
    RationalPoly q;
    divide(f, g, &q);
    f = std::move(q);
  }
  std::vector<RationalPoly> chain{f, derivative(f)};
  while (!chain.back().empty()) {
    RationalPoly r = divide(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  chain.pop_back();
  return chain;
}

std::size_t sign_variations(const std::vector<RationalPoly>& chain,
                            const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& f : chain) {
    const int s = sgn(eval(f, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t roots_in(const std::vector<RationalPoly>& chain,
                     const Rational& a, const Rational& b) {
  if (!(a < b)) return 0;
  const auto va = sign_variations(chain, a);
  const auto vb = sign_variations(chain, b);
  return va > vb ? va - vb : 0;
}

Count gcd_of(const std::vector<Count>& v) {
  Count g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

std::size_t bit_length(const Count& n) {
  return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

Rational rational_power(Prime base, long k) {
  Count magnitude = power(base, static_cast<std::uint64_t>(k < 0 ? -k : k));
  return k < 0 ? Rational(Count(1), magnitude) : Rational(magnitude);
}

// floor(log_base x) for x > 0.
long floor_log(Prime base, const Rational& x) {
  const double approx = std::log(x.get_d()) / std::log(double(base.value()));
  long k = std::isfinite(approx) ? static_cast<long>(std::floor(approx)) : 0;
  while (rational_power(base, k) > x) --k;
  while (rational_power(base, k + 1) <= x) ++k;
  return k;
}

// Fraction bits n with 2^-n <= precision / 2.
unsigned fraction_bits(const Rational& precision) {
  if (precision <= 0) throw InvalidArgument("precision must be positive");
  unsigned n = 1;
  Rational step(1, 2);
  while (step > precision / 2) {
    step /= 2;
    ++n;
  }
  return n;
}

Rational log_bound(Prime base, const Rational& x, const Rational& precision,
                   Rounding mode) {
  if (x <= 0) throw InvalidArgument("logarithm of a non-positive bound");
  const long k = floor_log(base, x);
  const Rational y = x / rational_power(base, k);  // in [1, base)

  const unsigned n = fraction_bits(precision);
  const unsigned working = n + 32;
  const bool up = mode == Rounding::kUp;
  Count one = 1;
  mpz_mul_2exp(one.get_mpz_t(), one.get_mpz_t(), working);
  const Count top = one * base.value();

  auto scale_down = [&](Count& v) {
    if (up) {
      mpz_cdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), working);
    } else {
      mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), working);
    }
  };
  auto divide_base = [&](Count& v) {
    if (up) {
      mpz_cdiv_q_ui(v.get_mpz_t(), v.get_mpz_t(), base.value());
    } else {
      mpz_fdiv_q_ui(v.get_mpz_t(), v.get_mpz_t(), base.value());
    }
  };
  // The true value tracked by Y always lies in [1, base].
  auto clamp = [&](Count& v) {
    if (up && v > top) v = top;
    if (!up && v < one) v = one;
  };

  Count fixed = y.get_num() * one;
  if (up) {
    mpz_cdiv_q(fixed.get_mpz_t(), fixed.get_mpz_t(), y.get_den().get_mpz_t());
  } else {
    mpz_fdiv_q(fixed.get_mpz_t(), fixed.get_mpz_t(), y.get_den().get_mpz_t());
  }
  clamp(fixed);

  Count bits = 0;
  for (unsigned i = 0; i < n; ++i) {
    fixed *= fixed;
    scale_down(fixed);
    bits *= 2;
    if (fixed >= top) {
      bits += 1;
      divide_base(fixed);
    }
    clamp(fixed);
  }
  if (up) bits += 1;  // the unread tail is at most 1 ulp
  Count denom = 1;
  mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), n);
  Rational result(bits, denom);
  result.canonicalize();
  return result + k;
}

}  // namespace

CharPoly::CharPoly(std::vector<Count> ascending)
    : coeffs_(std::move(ascending)) {
  if (coeffs_.empty() || coeffs_.back() != 1) {
    throw InvalidArgument("CharPoly must be monic");
  }
}

Rational CharPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

CharPoly char_poly(const CountMatrix& u) {
  if (!u.square()) throw InvalidArgument("char_poly: matrix is not square");
  const std::size_t n = u.rows();
  std::vector<Count> c(n + 1, Count(0));
  c[n] = 1;
  CountMatrix m(n, n, Count(0));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = U M_{k-1} + c_{n-k+1} I
    CountMatrix next(n, n, Count(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Count s = 0;
        for (std::size_t l = 0; l < n; ++l) s += u(i, l) * m(l, j);
        next(i, j) = s;
      }
      next(i, i) += c[n - k + 1];
    }
    m = std::move(next);
    // c_{n-k} = -tr(U M_k) / k
    Count trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += u(i, l) * m(l, i);
    }
    if (!mpz_divisible_ui_p(trace.get_mpz_t(), k)) {
      throw InvariantViolation("char_poly: inexact trace division");
    }
    mpz_divexact_ui(trace.get_mpz_t(), trace.get_mpz_t(), k);
    c[n - k] = -trace;
  }
  return CharPoly(std::move(c));
}

std::size_t sturm_root_count(const CharPoly& poly, const Rational& a,
                             const Rational& b) {
  return roots_in(sturm_chain(poly), a, b);
}

CountMatrix strip_zero_lines(const CountMatrix& u) {
  if (!u.square()) throw InvalidArgument("strip_zero_lines: not square");
  std::vector<std::size_t> keep(u.rows());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t pos = 0; pos < keep.size(); ++pos) {
      const std::size_t i = keep[pos];
      bool row_zero = true;
      bool col_zero = true;
      for (std::size_t j : keep) {
        row_zero = row_zero && u(i, j) == 0;
        col_zero = col_zero && u(j, i) == 0;
      }
      if (row_zero || col_zero) {
        keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(pos));
        changed = true;
        break;
      }
    }
  }
  CountMatrix out(keep.size(), keep.size());
  for (std::size_t r = 0; r < keep.size(); ++r) {
    for (std::size_t c = 0; c < keep.size(); ++c) out(r, c) = u(keep[r], keep[c]);
  }
  return out;
}

std::vector<CollatzWielandtBounds> collatz_wielandt_trace(const CountMatrix& u,
                                                          unsigned steps) {
  if (!u.square()) throw InvalidArgument("collatz_wielandt: not square");
  std::vector<CollatzWielandtBounds> trace;
  std::vector<Count> x(u.rows(), Count(1));
  for (unsigned step = 0; step < steps; ++step) {
    const std::vector<Count> y = multiply<Count>(u, x);
    CollatzWielandtBounds b;
    bool first = true;
    bool all_positive = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) {
        all_positive = false;
        continue;
      }
      Rational ratio(y[i], x[i]);
      ratio.canonicalize();
      if (first || ratio < b.lo) b.lo = ratio;
      if (first || ratio > *b.hi) b.hi = ratio;
      first = false;
    }
    if (!all_positive) b.hi.reset();
    trace.push_back(std::move(b));
    const Count g = gcd_of(y);
    if (g == 0) break;
    x = y;
    for (auto& v : x) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  return trace;
}

SpectralEstimate perron_interval(const CountMatrix& u, const Rational& tol,
                                 const PerronOptions& options) {
  if (!u.square()) throw InvalidArgument("perron_interval: not square");
  if (tol <= 0) throw InvalidArgument("perron_interval: tol must be positive");
  for (std::size_t i = 0; i < u.rows(); ++i) {
    for (const auto& v : u.row(i)) {
      if (v < 0) throw InvalidArgument("perron_interval: negative entry");
    }
  }

  const CountMatrix core = strip_zero_lines(u);
  SpectralEstimate est;
  if (core.rows() == 0) {
    // Nilpotent: every eigenvalue is 0.
    est.converged = true;
    est.charpoly_confirmed = true;
    return est;
  }

  const unsigned cap = options.iteration_cap.value_or(static_cast<unsigned>(
      10 * (u.rows() + 2 + bit_length(tol.get_den()))));

  // No zero rows remain, so x stays strictly positive and both bounds exist.
  std::vector<Count> x(core.rows(), Count(1));
  bool have = false;
  for (unsigned it = 0; it < cap; ++it) {
    const std::vector<Count> y = multiply<Count>(core, x);
    Rational lo, hi;
    for (std::size_t i = 0; i < x.size(); ++i) {
      Rational ratio(y[i], x[i]);
      ratio.canonicalize();
      if (i == 0 || ratio < lo) lo = ratio;
      if (i == 0 || ratio > hi) hi = ratio;
    }
    if (!have || lo > est.lo) est.lo = lo;
    if (!have || hi < est.hi) est.hi = hi;
    have = true;
    est.iterations = it + 1;
    if (est.width() <= tol) {
      est.converged = true;
      break;
    }
    const Count g = gcd_of(y);
    x = y;
    for (auto& v : x) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }

  const CharPoly poly = char_poly(core);
  const auto chain = sturm_chain(poly);

  if (!est.converged && options.bisection_fallback) {
    Rational lo = est.lo;
    Rational hi = est.hi;
    const bool lo_root = poly.sign_at(lo) == 0;
    if (lo_root + roots_in(chain, lo, hi) == 1) {
      if (lo_root) {
        hi = lo;
      }
      while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        if (poly.sign_at(mid) == 0) {
          lo = hi = mid;
          break;
        }
        if (roots_in(chain, lo, mid) == 1) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      est.lo = lo;
      est.hi = hi;
      est.converged = true;
    }
  }

  const Rational a = est.lo - tol;
  const Rational b = est.hi + tol;
  const std::size_t around = (poly.sign_at(a) == 0) + roots_in(chain, a, b);
  est.charpoly_confirmed =
      around == 1 && poly.sign_at(a) * poly.sign_at(b) < 0;
  return est;
}

Rational log_lower(Prime base, const Rational& x, const Rational& precision) {
  return log_bound(base, x, precision, Rounding::kDown);
}

Rational log_upper(Prime base, const Rational& x, const Rational& precision) {
  return log_bound(base, x, precision, Rounding::kUp);
}

LogInterval log_interval(Prime base, const Rational& lo, const Rational& hi,
                         const Rational& precision) {
  if (lo > hi) throw InvalidArgument("log_interval: lo > hi");
  return {log_lower(base, lo, precision), log_upper(base, hi, precision)};
}

CxfEstimate cxf(Prime p, std::uint32_t d, const Rational& tol) {
  if (d < 3) {
    throw InvalidArgument(
        "cx_F needs d >= 3: for d <= 2 the complexity sequence vanishes from "
        "e = 2 on");
  }
  const TransferSystem sys = build_system(p, d);
  CxfEstimate out;
  out.rho = perron_interval(sys.U, tol);
  out.cxf = log_interval(p, out.rho.lo, out.rho.hi, tol / 8);
  out.within_dimension_bound = out.cxf.hi <= Rational(d - 1);
  return out;
}

}  // namespace frobcx
