#include <compare>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "pmd/rational.hpp"

using pmd::Integer;
using pmd::Rational;

TEST(MakeRational, ReducesToLowestTerms) {
  Rational r = pmd::make_rational(10, 4);
  EXPECT_EQ(r.num(), 5);
  EXPECT_EQ(r.den(), 2);
}

TEST(MakeRational, EmbedsIntegers) {
  Rational r = pmd::make_rational(3, 1);
  EXPECT_EQ(r.num(), 3);
  EXPECT_EQ(r.den(), 1);
  EXPECT_TRUE(r.is_integer());
}

TEST(MakeRational, NormalizesSignIntoNumerator) {
  Rational r = pmd::make_rational(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
}

TEST(MakeRational, ZeroHasUnitDenominator) {
  Rational r = pmd::make_rational(0, -17);
  EXPECT_EQ(r.num(), 0);
  EXPECT_EQ(r.den(), 1);
}

TEST(MakeRational, RejectsZeroDenominator) {
  EXPECT_THROW(pmd::make_rational(1, 0), std::invalid_argument);
}

TEST(Compare, Examples) {
  EXPECT_EQ(pmd::cmp(pmd::make_rational(5, 2), Rational(3)), std::strong_ordering::less);
  EXPECT_EQ(pmd::cmp(pmd::make_rational(5, 2), pmd::make_rational(10, 4)), std::strong_ordering::equal);
  EXPECT_EQ(pmd::cmp(pmd::make_rational(470, 49), pmd::make_rational(470, 51)), std::strong_ordering::greater);
}

TEST(Compare, HugeOperandsCompareExactly) {
  Integer big("1000000000000000000000000000001", 10);
  Rational x(big, big + 1);
  Rational y(big + 1, big + 2);
  EXPECT_LT(x, y);
}

TEST(Compare, RandomFractionsAgreeWithCrossMultiplication) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 500);
  for (int i = 0; i < 5000; ++i) {
    long n1 = num(rng), d1 = den(rng), n2 = num(rng), d2 = den(rng);
    Rational x(n1, d1);
    Rational y(n2, d2);
    long lhs = n1 * d2;
    long rhs = n2 * d1;
    EXPECT_EQ(x <=> y, lhs <=> rhs) << n1 << "/" << d1 << " vs " << n2 << "/" << d2;
    EXPECT_EQ(x == y, lhs == rhs);
    // totality and antisymmetry
    EXPECT_EQ(x <=> y, 0 <=> (y <=> x));
  }
}

TEST(Arithmetic, FieldOperations) {
  Rational half(1, 2);
  Rational third(1, 3);
  EXPECT_EQ(half + third, Rational(5, 6));
  EXPECT_EQ(half - third, Rational(1, 6));
  EXPECT_EQ(half * third, Rational(1, 6));
  EXPECT_EQ(half / third, Rational(3, 2));
  EXPECT_THROW(half / Rational(0), std::invalid_argument);
}

TEST(CeilDiv, Examples) {
  EXPECT_EQ(pmd::ceil_div(20, 7), 3);
  EXPECT_EQ(pmd::ceil_div(10, 2), 5);
  EXPECT_EQ(pmd::ceil_div(6, 4), 2);
  EXPECT_EQ(pmd::ceil_div(-6, 4), -1);
  EXPECT_EQ(pmd::floor_div(-6, 4), -2);
}

TEST(CeilDiv, RejectsNonPositiveDivisor) {
  EXPECT_THROW(pmd::ceil_div(1, 0), std::invalid_argument);
  EXPECT_THROW(pmd::ceil_div(1, -3), std::invalid_argument);
  EXPECT_THROW(pmd::floor_div(1, 0), std::invalid_argument);
}

TEST(CeilDiv, BracketsTheQuotient) {
  for (long p = -60; p <= 60; ++p) {
    for (long q = 1; q <= 30; ++q) {
      Integer lo = pmd::floor_div(p, q);
      Integer hi = pmd::ceil_div(p, q);
      EXPECT_LE(lo * q, p);
      EXPECT_GE(hi * q, p);
      Integer gap = hi - lo;
      EXPECT_EQ(gap, p % q == 0 ? 0 : 1) << p << "/" << q;
      EXPECT_EQ(lo * q + pmd::rem(p, q), p);
    }
  }
}

TEST(Remainder, FloorAndCeilingIdentities) {
  for (long a = 1; a <= 1000; ++a) {
    for (long b = 1; b <= 1000; ++b) {
      // ⌊b/a⌋·a + [b]_a = b and ⌈b/a⌉·a − [−b]_a = b
      ASSERT_EQ(pmd::floor_div(b, a) * a + pmd::rem(b, a), b);
      ASSERT_EQ(pmd::ceil_div(b, a) * a - pmd::rem(-b, a), b);
    }
  }
}

TEST(Parse, IntegersAndFractions) {
  EXPECT_EQ(pmd::parse_integer("42"), 42);
  EXPECT_EQ(pmd::parse_integer("-7"), -7);
  EXPECT_EQ(pmd::parse_integer("123456789012345678901234567890").get_str(), "123456789012345678901234567890");
  EXPECT_EQ(pmd::parse_rational("5/2"), Rational(5, 2));
  EXPECT_EQ(pmd::parse_rational("10/4"), Rational(5, 2));
  EXPECT_EQ(pmd::parse_rational("3"), Rational(3));
}

TEST(Parse, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "/", "1/", "/2", "abc", "1.5", " 3", "3 ", "1/2/3", "--1", "+"}) {
    EXPECT_THROW(pmd::parse_rational(bad), std::invalid_argument) << "'" << bad << "'";
  }
  EXPECT_THROW(pmd::parse_integer(""), std::invalid_argument);
  EXPECT_THROW(pmd::parse_integer("0x10"), std::invalid_argument);
}

TEST(Format, RoundTripsThroughText) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  for (int i = 0; i < 500; ++i) {
    Rational r(num(rng), den(rng));
    EXPECT_EQ(pmd::parse_rational(r.to_string()), r);
  }
}
