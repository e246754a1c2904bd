#include "frobcx/closedform.hpp"

#include <gtest/gtest.h>

#include "frobcx/errors.hpp"
#include "frobcx/transfer.hpp"
#include "high_precision.hpp"

namespace frobcx {
namespace {

using testing::Float100;

TEST(C3ClosedTest, Examples) {
  EXPECT_EQ(c3_closed(Prime(2), 5), 27);
  EXPECT_EQ(c3_closed(Prime(3), 2), 9);
  EXPECT_EQ(c3_closed(Prime(5), 3), 1500);
  EXPECT_THROW(c3_closed(Prime(3), 1), InvalidArgument);
}

TEST(C3ClosedTest, PowersOfThreeAtTwo) {
  Count expected = 1;
  for (std::uint32_t e = 2; e <= 20; ++e) {
    EXPECT_EQ(c3_closed(Prime(2), e), expected);
    expected *= 3;
  }
}

TEST(CxTd3Test, Examples) {
  EXPECT_EQ(cx_t_d3(Prime(2)), 3);
  EXPECT_EQ(cx_t_d3(Prime(3)), 6);
  EXPECT_EQ(cx_t_d3(Prime(7)), 28);
}

TEST(XiWeightTest, MatchesDigitFormula) {
  // i = 5 = 12_3 at p = 3, e = 2: (3-1-1) * 2 = 2
  EXPECT_EQ(xi_weight(Prime(3), 2, 5), 2);
  // i = 11 = 1011_2 at p = 2, e = 4: (1-1)(0+1)(1+1)*1 = 0
  EXPECT_EQ(xi_weight(Prime(2), 4, 11), 0);
  // i = 3 = 0011_2: (1-0)(0+1)(1+1)*1 = 2
  EXPECT_EQ(xi_weight(Prime(2), 4, 3), 2);
  EXPECT_THROW(xi_weight(Prime(2), 1, 0), InvalidArgument);
}

// The xi weights count (j, k) completions of x^i, so at d = 3 they sum to
// c_{3,e}.
TEST(LowerBoundTest, ExactAtThreeVariables) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint32_t e = 2; e <= 5; ++e) {
      EXPECT_EQ(lower_bound(Prime(p), 3, e), c3_closed(Prime(p), e));
    }
  }
}

TEST(LowerBoundTest, MatchesDirectSum) {
  for (std::uint32_t p : {2u, 3u}) {
    for (std::uint32_t d = 3; d <= 6; ++d) {
      for (std::uint32_t e = 2; e <= 4; ++e) {
        const Count terms = power(Prime(p), e);
        Count direct = 0;
        for (Count i = 0; i < terms; ++i) {
          direct += xi_weight(Prime(p), e, i) * binomial(d - 3 + i, i.get_ui());
        }
        EXPECT_EQ(lower_bound(Prime(p), d, e), direct);
      }
    }
  }
}

TEST(LowerBoundTest, Examples) {
  EXPECT_EQ(lower_bound(Prime(2), 4, 2), 2);
  EXPECT_LE(lower_bound(Prime(2), 4, 2), c_de(Prime(2), 4, 2));
  EXPECT_EQ(lower_bound(Prime(2), 5, 3), 23);
  EXPECT_LE(lower_bound(Prime(2), 5, 3), c_de(Prime(2), 5, 3));
  EXPECT_THROW(lower_bound(Prime(2), 2, 3), InvalidArgument);
  EXPECT_THROW(lower_bound(Prime(2), 4, 1), InvalidArgument);
  EXPECT_THROW(lower_bound(Prime(2), 4, 10, 1000), GuardExceeded);
}

TEST(Example24Test, Values) {
  EXPECT_EQ(example24_sequence(0), 4);
  EXPECT_EQ(example24_sequence(1), 24);
  EXPECT_EQ(example24_sequence(2), 160);
  const auto sys = build_system(Prime(2), 4);
  for (std::uint32_t e = 0; e <= 30; ++e) {
    EXPECT_EQ(example24_sequence(e), state(sys, e)[0]) << e;
  }
}

TEST(SegreCxfTest, ContainsKnownValues) {
  const Rational tol(1, 1000000000);
  const auto s23 = segre_cxf(Prime(2), 3, tol);
  EXPECT_TRUE(testing::interval_contains(s23.lo, s23.hi,
                                         testing::log_base(2, Float100(3))));
  const auto s24 = segre_cxf(Prime(2), 4, tol);
  EXPECT_TRUE(testing::interval_contains(
      s24.lo, s24.hi,
      testing::log_base(2, 5 + boost::multiprecision::sqrt(Float100(5)))));
  const auto s33 = segre_cxf(Prime(3), 3, tol);
  EXPECT_TRUE(testing::interval_contains(s33.lo, s33.hi,
                                         testing::log_base(3, Float100(6))));
  for (const auto* s : {&s23, &s24, &s33}) EXPECT_LE(s->width(), tol);
}

TEST(SegreCxfTest, ThreeVariablesApproachTwoFromBelow) {
  const Rational tol(1, 1000000);
  Float100 previous = 0;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const auto s = segre_cxf(Prime(p), 3, tol);
    const Float100 exact = 1 + testing::log_base(p, Float100(p + 1)) -
                           testing::log_base(p, Float100(2));
    EXPECT_TRUE(testing::interval_contains(s.lo, s.hi, exact)) << p;
    const Float100 mid = testing::to_float((s.lo + s.hi) / 2);
    EXPECT_GT(mid, previous);
    EXPECT_LT(s.hi, 2);
    previous = mid;
  }
}

TEST(SegreClosedFormTest, Strings) {
  EXPECT_EQ(segre_closed_form(Prime(2), 3), "log_2(3)");
  EXPECT_EQ(segre_closed_form(Prime(3), 3), "log_3(6)");
  EXPECT_EQ(segre_closed_form(Prime(2), 4), "log_2(5+sqrt(5))");
  EXPECT_FALSE(segre_closed_form(Prime(3), 4).has_value());
}

}  // namespace
}  // namespace frobcx
