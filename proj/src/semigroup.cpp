#include "pmd/semigroup.hpp"

#include <utility>

namespace pmd {

Integer mod_inverse(const Integer& x, const Integer& m) {
  if (sgn(x) <= 0 || sgn(m) <= 0) {
    throw std::invalid_argument("mod_inverse arguments must be positive");
  }
  if (m == 1) {
    return 1;
  }
  // Invariant: old_r ≡ old_s·x and r ≡ s·x (mod m).
  Integer old_r = rem(x, m);
  Integer r = m;
  Integer old_s = 1;
  Integer s = 0;
  while (r != 0) {
    Integer quot = floor_div(old_r, r);
    Integer next_r = old_r - quot * r;
    Integer next_s = old_s - quot * s;
    old_r = std::move(r);
    r = std::move(next_r);
    old_s = std::move(s);
    s = std::move(next_s);
  }
  if (old_r != 1) {
    throw NotInvertible(x.get_str() + " is not invertible modulo " + m.get_str());
  }
  return rem(old_s, m);
}

TwoGenSemigroup::TwoGenSemigroup(Integer a1, Integer a2) : a1_(std::move(a1)), a2_(std::move(a2)) {
  if (sgn(a1_) <= 0 || sgn(a2_) <= 0) {
    throw std::invalid_argument("generators must be positive");
  }
  if (gcd(a1_, a2_) != 1) {
    throw std::invalid_argument("generators must be coprime");
  }
}

bool membership(const TwoGenSemigroup& sg, const Integer& x) {
  if (sgn(x) < 0) {
    return false;
  }
  for (Integer rest = x; sgn(rest) >= 0; rest -= sg.a1()) {
    if (rem(rest, sg.a2()) == 0) {
      return true;
    }
  }
  return false;
}

QuotientQuery::QuotientQuery(TwoGenSemigroup sg, Integer d) : sg_(std::move(sg)), d_(std::move(d)) {
  if (sgn(d_) <= 0) {
    throw std::invalid_argument("divisor must be positive");
  }
  u_ = mod_inverse(sg_.a2(), sg_.a1());
}

Instance QuotientQuery::instance() const {
  return {rem(u_ * d_, sg_.a1()), sg_.a1(), make_rational(d_, sg_.a2())};
}

Integer quotient_multiplicity(const QuotientQuery& query) { return solve(query.instance()).value; }

Integer quotient_multiplicity_naive(const QuotientQuery& query) {
  for (Integer x = 1;; ++x) {
    if (membership(query.semigroup(), x * query.d())) {
      return x;
    }
  }
}

RationalInterval::RationalInterval(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_.sign() <= 0 || q_.sign() <= 0) {
    throw std::invalid_argument("interval endpoints must be positive");
  }
  if (p_ >= q_) {
    throw std::invalid_argument("interval requires p < q");
  }
}

Instance RationalInterval::instance() const {
  Integer factor = a1() * b2();
  Integer modulus = b1() * b2();
  Integer proportion = factor - a2() * b1();
  return {std::move(factor), std::move(modulus), Rational(proportion)};
}

Integer interval_multiplicity(const RationalInterval& iv) { return solve(iv.instance()).value; }

Integer interval_multiplicity_naive(const RationalInterval& iv) {
  // n is reachable iff the integer window [ceil(n/q), floor(n/p)] is non-empty.
  for (Integer n = 1;; ++n) {
    Integer lo = ceil_div(n * iv.q().den(), iv.q().num());
    Integer hi = floor_div(n * iv.p().den(), iv.p().num());
    if (lo >= 1 && lo <= hi) {
      return n;
    }
  }
}

namespace {

void require_frobenius_range(const Integer& a, const Integer& b) {
  if (a < 2 || a >= b) {
    throw std::invalid_argument("frobenius requires 2 <= a < b");
  }
}

}  // namespace

RationalInterval frobenius_interval(const Integer& a, const Integer& b) {
  require_frobenius_range(a, b);
  Integer b2 = b * b;
  return {make_rational(2 * b2 + 1, 2 * a * b), make_rational(2 * b2 - 1, 2 * b * (a - 1))};
}

Integer frobenius_f1(const Integer& a, const Integer& b) {
  return b - interval_multiplicity(frobenius_interval(a, b));
}

Integer frobenius_naive(const Integer& a, const Integer& b) {
  require_frobenius_range(a, b);
  Integer largest = 0;
  for (Integer x = 1; x <= b; ++x) {
    if (rem(a * x, b) > x) {
      largest = x;
    }
  }
  return largest;
}

}  // namespace pmd
