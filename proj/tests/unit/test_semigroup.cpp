#include <algorithm>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "pmd/semigroup.hpp"

using pmd::Integer;
using pmd::QuotientQuery;
using pmd::Rational;
using pmd::RationalInterval;
using pmd::TwoGenSemigroup;

TEST(ModInverse, Examples) {
  EXPECT_EQ(pmd::mod_inverse(5, 3), 2);
  EXPECT_EQ(pmd::mod_inverse(1, 7), 1);
  EXPECT_EQ(pmd::mod_inverse(7, 1), 1);
}

TEST(ModInverse, InvertsEveryUnit) {
  for (long m = 1; m <= 200; ++m) {
    for (long x = 1; x <= 60; ++x) {
      if (std::gcd(x, m) != 1) {
        EXPECT_THROW(pmd::mod_inverse(x, m), pmd::NotInvertible);
        continue;
      }
      Integer u = pmd::mod_inverse(x, m);
      EXPECT_GE(u, 1);
      EXPECT_LE(u, m);
      EXPECT_EQ(pmd::rem(u * x, m), pmd::rem(1, m)) << x << " mod " << m;
    }
  }
}

TEST(ModInverse, RejectsNonPositive) {
  EXPECT_THROW(pmd::mod_inverse(0, 5), std::invalid_argument);
  EXPECT_THROW(pmd::mod_inverse(3, 0), std::invalid_argument);
}

TEST(TwoGenSemigroup, RejectsBadGenerators) {
  EXPECT_THROW(TwoGenSemigroup(4, 6), std::invalid_argument);
  EXPECT_THROW(TwoGenSemigroup(0, 5), std::invalid_argument);
  EXPECT_NO_THROW(TwoGenSemigroup(1, 5));
}

TEST(Membership, Examples) {
  TwoGenSemigroup sg(3, 5);
  EXPECT_FALSE(pmd::membership(sg, 7));
  EXPECT_TRUE(pmd::membership(sg, 8));
  EXPECT_TRUE(pmd::membership(sg, 0));
  EXPECT_FALSE(pmd::membership(sg, -3));
}

TEST(Membership, MatchesSieve) {
  for (long a1 = 1; a1 <= 15; ++a1) {
    for (long a2 = 1; a2 <= 15; ++a2) {
      if (std::gcd(a1, a2) != 1) continue;
      TwoGenSemigroup sg(a1, a2);
      auto sieve = oracle::two_generator_sieve(a1, a2, 250);
      for (long x = 0; x <= 250; ++x) {
        ASSERT_EQ(pmd::membership(sg, x), sieve[static_cast<std::size_t>(x)]) << a1 << "," << a2 << " " << x;
      }
    }
  }
}

TEST(Quotient, Examples) {
  QuotientQuery by2(TwoGenSemigroup(3, 5), 2);
  EXPECT_EQ(by2.u(), 2);
  EXPECT_EQ(by2.instance(), (pmd::Instance{1, 3, Rational(2, 5)}));
  EXPECT_EQ(pmd::quotient_multiplicity(by2), 3);
  EXPECT_EQ(pmd::quotient_multiplicity_naive(by2), 3);

  EXPECT_EQ(pmd::quotient_multiplicity(QuotientQuery(TwoGenSemigroup(3, 5), 1)), 3);
  EXPECT_EQ(pmd::quotient_multiplicity(QuotientQuery(TwoGenSemigroup(3, 5), 3)), 1);

  EXPECT_EQ(pmd::quotient_multiplicity_naive(QuotientQuery(TwoGenSemigroup(2, 3), 5)), 1);
  EXPECT_EQ(pmd::quotient_multiplicity_naive(QuotientQuery(TwoGenSemigroup(5, 7), 3)), 4);
  EXPECT_EQ(pmd::quotient_multiplicity(QuotientQuery(TwoGenSemigroup(5, 7), 3)), 4);
}

TEST(Quotient, RejectsNonPositiveDivisor) {
  EXPECT_THROW(QuotientQuery(TwoGenSemigroup(3, 5), 0), std::invalid_argument);
}

TEST(Quotient, UnitDivisorAndMembersOfTheSemigroup) {
  for (long a1 = 1; a1 <= 20; ++a1) {
    for (long a2 = 1; a2 <= 20; ++a2) {
      if (std::gcd(a1, a2) != 1) continue;
      TwoGenSemigroup sg(a1, a2);
      EXPECT_EQ(pmd::quotient_multiplicity(QuotientQuery(sg, 1)), std::min(a1, a2));
      for (long d = 1; d <= 30; ++d) {
        Integer m = pmd::quotient_multiplicity(QuotientQuery(sg, d));
        if (pmd::membership(sg, d)) {
          EXPECT_EQ(m, 1);
        }
        EXPECT_EQ(m, oracle::quotient_multiplicity(a1, a2, d)) << a1 << "," << a2 << " / " << d;
      }
    }
  }
}

TEST(Interval, Examples) {
  RationalInterval iv(Rational(51, 20), Rational(49, 10));
  EXPECT_EQ(iv.instance(), (pmd::Instance{980, 2499, Rational(470)}));
  EXPECT_EQ(pmd::interval_multiplicity(iv), 3);
  EXPECT_EQ(pmd::interval_multiplicity_naive(iv), 3);

  RationalInterval low(Rational(1, 2), Rational(3, 4));
  EXPECT_EQ(pmd::interval_multiplicity(low), 1);
  EXPECT_EQ(pmd::interval_multiplicity_naive(low), 1);

  RationalInterval around3(Rational(5, 2), Rational(3));
  EXPECT_EQ(pmd::interval_multiplicity(around3), 3);
  EXPECT_EQ(pmd::interval_multiplicity_naive(around3), 3);

  RationalInterval upto4(Rational(7, 2), Rational(4));
  EXPECT_EQ(pmd::interval_multiplicity(upto4), 4);
  EXPECT_EQ(pmd::interval_multiplicity_naive(upto4), 4);
}

TEST(Interval, RejectsBadEndpoints) {
  EXPECT_THROW(RationalInterval(Rational(3), Rational(3)), std::invalid_argument);
  EXPECT_THROW(RationalInterval(Rational(4), Rational(3)), std::invalid_argument);
  EXPECT_THROW(RationalInterval(Rational(0), Rational(3)), std::invalid_argument);
  EXPECT_THROW(RationalInterval(Rational(-1), Rational(3)), std::invalid_argument);
}

TEST(Interval, MatchesOracleOnGrid) {
  for (long pn = 1; pn <= 14; ++pn) {
    for (long pd = 1; pd <= 9; ++pd) {
      for (long qn = 1; qn <= 14; ++qn) {
        for (long qd = 1; qd <= 9; ++qd) {
          Rational p(pn, pd);
          Rational q(qn, qd);
          if (p >= q) continue;
          RationalInterval iv(p, q);
          long expected = oracle::interval_multiplicity(pn, pd, qn, qd);
          ASSERT_EQ(pmd::interval_multiplicity(iv), expected) << p << " " << q;
          ASSERT_EQ(pmd::interval_multiplicity_naive(iv), expected) << p << " " << q;
        }
      }
    }
  }
}

TEST(Interval, RepresentationIndependent) {
  // Scaling the interval triple by k·b1/k·a1 before solving changes nothing.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> pick(1, 50);
  for (int i = 0; i < 500; ++i) {
    Rational p(pick(rng), pick(rng));
    Rational q(pick(rng), pick(rng));
    if (p == q) continue;
    if (p > q) std::swap(p, q);
    RationalInterval iv(p, q);
    Integer base = pmd::interval_multiplicity(iv);
    for (long k : {2L, 3L, 7L}) {
      Integer a1 = k * iv.a1(), b1 = k * iv.b1();
      pmd::Instance scaled{a1 * iv.b2(), b1 * iv.b2(), Rational(a1 * iv.b2() - iv.a2() * b1)};
      EXPECT_EQ(pmd::solve(scaled).value, base) << p << " " << q << " k=" << k;
    }
  }
}

TEST(Frobenius, Examples) {
  EXPECT_EQ(pmd::frobenius_f1(2, 5), 2);
  EXPECT_EQ(pmd::frobenius_f1(3, 5), 3);
  EXPECT_EQ(pmd::frobenius_f1(2, 3), 1);
  EXPECT_EQ(pmd::frobenius_naive(2, 5), 2);
  EXPECT_EQ(pmd::frobenius_naive(3, 5), 3);
  EXPECT_EQ(pmd::frobenius_naive(2, 3), 1);
  // Gaps of S(4,5,1) are {1, 2}.
  EXPECT_EQ(pmd::frobenius_naive(4, 5), 2);
  EXPECT_EQ(pmd::frobenius_f1(4, 5), 2);
}

TEST(Frobenius, IntervalForThreeFive) {
  RationalInterval iv = pmd::frobenius_interval(3, 5);
  EXPECT_EQ(iv.p(), Rational(17, 10));
  EXPECT_EQ(iv.q(), Rational(49, 20));
  EXPECT_EQ(pmd::interval_multiplicity(iv), 2);
}

TEST(Interval, DividingByB1InsteadOfB2IsWrong) {
  // [2, 4]: the semigroup is {0, 2, 3, 4, ...}, multiplicity 2. The triple
  // (a1, b1, (a1·b2 − a2·b1)/b1) = (1, 2, 1) would give 1.
  RationalInterval iv(Rational(2), Rational(4));
  EXPECT_EQ(pmd::interval_multiplicity(iv), 2);
  EXPECT_EQ(pmd::solve({1, 2, Rational(1)}).value, 1);
}

TEST(Frobenius, FactorTwoBClosedFormIsWrong) {
  // (2b, 2b²+1, (4b³−4ab+2b)/(2b²+1)) at (a, b) = (3, 5) gives m = 6 and a
  // negative Frobenius number; the interval triple gives m = 2, F = 3.
  EXPECT_EQ(pmd::solve({10, 51, Rational(450, 51)}).value, 6);
  EXPECT_EQ(oracle::frobenius(3, 5), 3);
}

TEST(Frobenius, RejectsOutOfRange) {
  EXPECT_THROW(pmd::frobenius_f1(1, 5), std::invalid_argument);
  EXPECT_THROW(pmd::frobenius_f1(5, 5), std::invalid_argument);
  EXPECT_THROW(pmd::frobenius_f1(6, 5), std::invalid_argument);
  EXPECT_THROW(pmd::frobenius_naive(5, 5), std::invalid_argument);
}

TEST(Frobenius, MatchesIndependentOracle) {
  for (long b = 3; b <= 45; ++b) {
    for (long a = 2; a < b; ++a) {
      ASSERT_EQ(pmd::frobenius_f1(a, b), oracle::frobenius(a, b)) << a << " " << b;
      ASSERT_EQ(pmd::frobenius_naive(a, b), oracle::frobenius(a, b)) << a << " " << b;
    }
  }
}
