#include "regionbound/bigint.hpp"

#include <gtest/gtest.h>

#include "support/reference.hpp"

namespace regionbound {
namespace {

TEST(BigInt, BinomialMatchesPascal) {
  for (int n = 0; n <= 40; ++n) {
    for (int k = -1; k <= n + 1; ++k) {
      EXPECT_EQ(binomial(n, k), BigInt(static_cast<long>(testing::ref_binomial(n, k))))
          << n << " choose " << k;
    }
  }
}

TEST(BigInt, DecimalRoundTrip) {
  const BigInt x = power_of_two(130) + 7;
  EXPECT_EQ(parse_decimal(to_decimal(x)), x);
  EXPECT_EQ(to_decimal(power_of_two(64)), "18446744073709551616");
  EXPECT_THROW(parse_decimal("12a"), std::invalid_argument);
  EXPECT_THROW(parse_decimal(""), std::invalid_argument);
}

TEST(Rational, ParseForms) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(parse_rational("-1.25"), Rational(-5, 4));
  EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
  EXPECT_EQ(to_string(Rational(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

}  // namespace
}  // namespace regionbound
