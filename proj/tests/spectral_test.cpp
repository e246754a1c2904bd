#include "frobcx/spectral.hpp"

#include <gtest/gtest.h>

#include <random>

#include "frobcx/errors.hpp"
#include "frobcx/transfer.hpp"
#include "high_precision.hpp"

namespace frobcx {
namespace {

using testing::Float100;

// det(x I - U) by Leibniz expansion over all permutations.
Count leibniz_charpoly_at(const CountMatrix& u, const Count& x) {
  const std::size_t n = u.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Count det = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Count term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) {
      term *= (i == perm[i] ? x : Count(0)) - u(i, perm[i]);
    }
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0 ? Count(1) : det;
}

TEST(CharPolyTest, Examples) {
  EXPECT_EQ(char_poly(CountMatrix{{6, 4}, {1, 4}}), CharPoly({20, -10, 1}));
  EXPECT_EQ(char_poly(CountMatrix{{3}}), CharPoly({-3, 1}));
  EXPECT_EQ(char_poly(CountMatrix{{0, 0}, {0, 0}}), CharPoly({0, 0, 1}));
}

TEST(CharPolyTest, MatchesLeibnizExpansion) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 5;
    CountMatrix u(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        u(i, j) = static_cast<unsigned long>(rng() % 50);
      }
    }
    const CharPoly poly = char_poly(u);
    ASSERT_EQ(poly.degree(), n);
    for (long x = -4; x <= 4; ++x) {
      EXPECT_EQ(poly.evaluate(Rational(x)), Rational(leibniz_charpoly_at(u, x)));
    }
  }
  for (std::uint32_t d = 3; d <= 7; ++d) {
    const auto sys = build_system(Prime(3), d);
    const CharPoly poly = char_poly(sys.U);
    for (long x = -3; x <= 3; ++x) {
      EXPECT_EQ(poly.evaluate(Rational(x)),
                Rational(leibniz_charpoly_at(sys.U, x)));
    }
  }
}

TEST(SturmTest, CountsDistinctRoots) {
  const CharPoly poly({20, -10, 1});  // roots 5 +- sqrt 5
  EXPECT_EQ(sturm_root_count(poly, 0, 10), 2u);
  EXPECT_EQ(sturm_root_count(poly, 5, 10), 1u);
  EXPECT_EQ(sturm_root_count(poly, 8, 100), 0u);
  const CharPoly squared({4, -4, 1});  // (x - 2)^2
  EXPECT_EQ(sturm_root_count(squared, 0, 5), 1u);
  EXPECT_EQ(sturm_root_count(squared, 0, 2), 1u);
  EXPECT_EQ(sturm_root_count(squared, 2, 5), 0u);
}

TEST(PerronIntervalTest, Examples) {
  const Rational tol(1, 1000000000);
  const auto est = perron_interval(CountMatrix{{6, 4}, {1, 4}}, tol);
  EXPECT_TRUE(est.converged);
  EXPECT_TRUE(est.charpoly_confirmed);
  EXPECT_LE(est.width(), tol);
  EXPECT_TRUE(testing::interval_contains(
      est.lo, est.hi, 5 + boost::multiprecision::sqrt(Float100(5))));

  const auto three = perron_interval(CountMatrix{{3}}, Rational(1, 7));
  EXPECT_EQ(three.lo, 3);
  EXPECT_EQ(three.hi, 3);
  const auto six = perron_interval(CountMatrix{{6}}, tol);
  EXPECT_EQ(six.lo, 6);
  EXPECT_EQ(six.hi, 6);
}

TEST(PerronIntervalTest, RejectsBadInput) {
  EXPECT_THROW(perron_interval(CountMatrix(2, 3, Count(1)), Rational(1, 10)),
               InvalidArgument);
  EXPECT_THROW(perron_interval(CountMatrix{{1}}, Rational(0)), InvalidArgument);
  EXPECT_THROW(perron_interval(CountMatrix{{-1}}, Rational(1, 2)),
               InvalidArgument);
}

TEST(PerronIntervalTest, TransferSystemsConverge) {
  const Rational tol(1, 1000000000000);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (std::uint32_t d = 3; d <= 8; ++d) {
      const auto sys = build_system(Prime(p), d);
      const auto est = perron_interval(sys.U, tol);
      EXPECT_TRUE(est.converged) << p << ' ' << d;
      EXPECT_TRUE(est.charpoly_confirmed) << p << ' ' << d;
      EXPECT_LE(est.width(), tol);
      EXPECT_GE(est.lo, 0);
      // sign change across the widened interval
      const CharPoly poly = char_poly(sys.U);
      EXPECT_LE(poly.sign_at(est.lo - tol) * poly.sign_at(est.hi + tol), 0);
    }
  }
}

TEST(PerronIntervalTest, BisectionFallback) {
  PerronOptions opts;
  opts.iteration_cap = 1;
  const Rational tol(1, 1000000000000);
  const auto est = perron_interval(CountMatrix{{6, 4}, {1, 4}}, tol, opts);
  EXPECT_EQ(est.iterations, 1u);
  EXPECT_TRUE(est.converged);
  EXPECT_LE(est.width(), tol);
  EXPECT_TRUE(testing::interval_contains(
      est.lo, est.hi, 5 + boost::multiprecision::sqrt(Float100(5))));

  opts.bisection_fallback = false;
  const auto raw = perron_interval(CountMatrix{{6, 4}, {1, 4}}, tol, opts);
  EXPECT_FALSE(raw.converged);
  EXPECT_EQ(raw.lo, 5);
  EXPECT_EQ(raw.hi, 10);
}

// Reducible with eigenvalues 2 and 3: the lower Collatz-Wielandt bound stays
// at 2 and the bracket keeps both roots, so the estimate is flagged.
TEST(PerronIntervalTest, ReducibleStallsWithFlag) {
  const auto est =
      perron_interval(CountMatrix{{2, 0}, {1, 3}}, Rational(1, 1000000));
  EXPECT_FALSE(est.converged);
  EXPECT_LE(est.lo, 3);
  EXPECT_GE(est.hi, 3);
}

TEST(PerronIntervalTest, ZeroLinesAreStripped) {
  EXPECT_EQ(strip_zero_lines(CountMatrix{{2, 1}, {0, 0}}), (CountMatrix{{2}}));
  EXPECT_EQ(strip_zero_lines(CountMatrix{{0, 5}, {0, 3}}), (CountMatrix{{3}}));
  EXPECT_EQ(strip_zero_lines(CountMatrix{{0, 1}, {0, 0}}).rows(), 0u);

  const auto est = perron_interval(CountMatrix{{2, 1}, {0, 0}}, Rational(1, 100));
  EXPECT_EQ(est.lo, 2);
  EXPECT_EQ(est.hi, 2);
  const auto nil = perron_interval(CountMatrix{{0, 1}, {0, 0}}, Rational(1, 100));
  EXPECT_EQ(nil.lo, 0);
  EXPECT_EQ(nil.hi, 0);
}

TEST(CollatzWielandtTest, BoundsAreMonotone) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint32_t d = 3; d <= 7; ++d) {
      const auto trace = collatz_wielandt_trace(build_system(Prime(p), d).U, 40);
      ASSERT_EQ(trace.size(), 40u);
      for (std::size_t k = 1; k < trace.size(); ++k) {
        ASSERT_TRUE(trace[k].hi.has_value());
        EXPECT_GE(trace[k].lo, trace[k - 1].lo);
        EXPECT_LE(*trace[k].hi, *trace[k - 1].hi);
        EXPECT_LE(trace[k].lo, *trace[k].hi);
      }
    }
  }
}

TEST(LogTest, OutwardAndTight) {
  const Rational precision(1, 1000000000000);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    for (const Rational x : {Rational(1), Rational(3), Rational(7, 3),
                             Rational(1, 5), Rational(1000001, 1000),
                             Rational(p), Rational(p * p * p)}) {
      const Rational lo = log_lower(Prime(p), x, precision);
      const Rational hi = log_upper(Prime(p), x, precision);
      const Float100 exact = testing::log_base(p, testing::to_float(x));
      EXPECT_TRUE(testing::interval_contains(lo, hi, exact));
      EXPECT_LE(exact - testing::to_float(lo), testing::to_float(precision));
      EXPECT_LE(testing::to_float(hi) - exact, testing::to_float(precision));
    }
  }
  EXPECT_THROW(log_lower(Prime(2), Rational(0), precision), InvalidArgument);
}

TEST(CxfTest, KnownValuesAndDimensionBound) {
  const Rational tol(1, 1000000000);
  const auto two_four = cxf(Prime(2), 4, tol);
  EXPECT_TRUE(testing::interval_contains(
      two_four.cxf.lo, two_four.cxf.hi,
      testing::log_base(2, 5 + boost::multiprecision::sqrt(Float100(5)))));
  EXPECT_LE(two_four.cxf.width(), tol);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const auto three = cxf(Prime(p), 3, tol);
    EXPECT_TRUE(testing::interval_contains(
        three.cxf.lo, three.cxf.hi,
        1 + testing::log_base(p, Float100(p + 1)) -
            testing::log_base(p, Float100(2))));
    for (std::uint32_t d = 3; d <= 8; ++d) {
      const auto est = cxf(Prime(p), d, tol);
      EXPECT_TRUE(est.within_dimension_bound);
      EXPECT_LE(est.cxf.hi, Rational(d - 1));
    }
  }
  EXPECT_THROW(cxf(Prime(2), 2, tol), InvalidArgument);
}

// c_{e+1}/c_e approaches rho(U).
TEST(CxfTest, RatiosApproachPerronRoot) {
  for (std::uint32_t p : {2u, 3u}) {
    for (std::uint32_t d = 3; d <= 5; ++d) {
      const auto est = perron_interval(build_system(Prime(p), d).U,
                                       Rational(1, 1000000));
      const auto r = complexity_sequence(Prime(p), d, 21);
      for (std::uint32_t e = 15; e <= 20; ++e) {
        const Rational ratio(r.c[e + 1], r.c[e]);
        EXPECT_GE(ratio, est.lo * Rational(99, 100));
        EXPECT_LE(ratio, est.hi * Rational(101, 100));
      }
    }
  }
}

}  // namespace
}  // namespace frobcx
