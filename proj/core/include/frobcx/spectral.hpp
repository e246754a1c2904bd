#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frobcx/basep.hpp"
#include "frobcx/count.hpp"
#include "frobcx/matrix.hpp"

namespace frobcx {

/// Monic integer polynomial, coefficients in ascending degree.
class CharPoly {
 public:
  explicit CharPoly(std::vector<Count> ascending);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  std::span<const Count> coefficients() const noexcept { return coeffs_; }
  const Count& operator[](std::size_t i) const { return coeffs_[i]; }

  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn(evaluate(x)); }

  friend bool operator==(const CharPoly&, const CharPoly&) = default;

 private:
  std::vector<Count> coeffs_;
};

/// det(lambda I - U), via the Faddeev-LeVerrier recursion with exact
/// integer division.
CharPoly char_poly(const CountMatrix& u);

/// Number of distinct real roots of `poly` in (a, b], by a Sturm chain.
std::size_t sturm_root_count(const CharPoly& poly, const Rational& a,
                             const Rational& b);

/// Deletes, repeatedly, every index whose row or column is zero. The
/// spectral radius is unchanged because each deletion splits off a
/// zero diagonal block.
CountMatrix strip_zero_lines(const CountMatrix& u);

/// Collatz-Wielandt bounds for a positive test vector x:
/// min_i (Ux)_i/x_i <= rho(U) <= max_i (Ux)_i/x_i. The upper bound is only
/// present when every x_i > 0.
struct CollatzWielandtBounds {
  Rational lo;
  std::optional<Rational> hi;
};

/// Bounds from x_k = U^k 1 for k = 0 .. steps-1.
std::vector<CollatzWielandtBounds> collatz_wielandt_trace(const CountMatrix& u,
                                                          unsigned steps);

/// Certified interval [lo, hi] for the Perron root, with exact endpoints.
struct SpectralEstimate {
  Rational lo;
  Rational hi;
  /// Width reached tol.
  bool converged = false;
  /// The characteristic polynomial changes sign across [lo - tol, hi + tol]
  /// and has exactly one distinct root there.
  bool charpoly_confirmed = false;
  unsigned iterations = 0;

  Rational width() const { return hi - lo; }
};

struct PerronOptions {
  /// Collatz-Wielandt iterations; defaults to
  /// 10 * (order + 2 + bit length of tol's denominator).
  std::optional<unsigned> iteration_cap;
  /// Bisect on the characteristic polynomial when the power iteration
  /// stalls above tol.
  bool bisection_fallback = true;
};

/// Throws InvalidArgument for non-square U, negative entries or tol <= 0.
SpectralEstimate perron_interval(const CountMatrix& u, const Rational& tol,
                                 const PerronOptions& options = {});

/// Outward-rounded interval around log_base(x) for x in [lo, hi], lo > 0.
/// Each endpoint is within `precision` of the true log of its bound.
struct LogInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

Rational log_lower(Prime base, const Rational& x, const Rational& precision);
Rational log_upper(Prime base, const Rational& x, const Rational& precision);
LogInterval log_interval(Prime base, const Rational& lo, const Rational& hi,
                         const Rational& precision);

/// Frobenius complexity log_p rho(U(p, d)) with its certificate.
struct CxfEstimate {
  SpectralEstimate rho;
  LogInterval cxf;
  /// cxf.hi <= d - 1.
  bool within_dimension_bound = false;
};

/// Width of the returned log interval is at most tol. Throws
/// InvalidArgument for d < 3.
CxfEstimate cxf(Prime p, std::uint32_t d, const Rational& tol);

}  // namespace frobcx
