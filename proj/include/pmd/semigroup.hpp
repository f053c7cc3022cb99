#pragma once

#include <stdexcept>

#include "pmd/rational.hpp"
#include "pmd/solver.hpp"

namespace pmd {

class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The u with 1 <= u <= m and x·u ≡ 1 (mod m), by the extended Euclidean
/// algorithm. Returns 1 for m = 1. Throws NotInvertible when gcd(x, m) != 1
/// and std::invalid_argument for non-positive arguments.
Integer mod_inverse(const Integer& x, const Integer& m);

/// ⟨a1, a2⟩ with coprime positive generators.
class TwoGenSemigroup {
 public:
  TwoGenSemigroup(Integer a1, Integer a2);

  const Integer& a1() const noexcept { return a1_; }
  const Integer& a2() const noexcept { return a2_; }

 private:
  Integer a1_;
  Integer a2_;
};

/// Whether x = λ1·a1 + λ2·a2 for some λ1, λ2 >= 0.
bool membership(const TwoGenSemigroup& sg, const Integer& x);

/// The quotient ⟨a1, a2⟩ / d = {x | x·d ∈ ⟨a1, a2⟩}. Caches u = a2^{-1} mod a1.
class QuotientQuery {
 public:
  QuotientQuery(TwoGenSemigroup sg, Integer d);

  const TwoGenSemigroup& semigroup() const noexcept { return sg_; }
  const Integer& d() const noexcept { return d_; }
  const Integer& u() const noexcept { return u_; }

  /// The inequality whose least positive solution is the quotient's
  /// multiplicity: ([u·d]_{a1}, a1, d/a2).
  Instance instance() const;

 private:
  TwoGenSemigroup sg_;
  Integer d_;
  Integer u_;
};

Integer quotient_multiplicity(const QuotientQuery& query);
Integer quotient_multiplicity_naive(const QuotientQuery& query);

/// Closed rational interval [p, q] with 0 < p < q. Endpoints are stored
/// reduced, p = b1/a1 and q = b2/a2.
class RationalInterval {
 public:
  RationalInterval(Rational p, Rational q);

  const Rational& p() const noexcept { return p_; }
  const Rational& q() const noexcept { return q_; }
  const Integer& a1() const noexcept { return p_.den(); }
  const Integer& b1() const noexcept { return p_.num(); }
  const Integer& a2() const noexcept { return q_.den(); }
  const Integer& b2() const noexcept { return q_.num(); }

  /// (a1·b2, b1·b2, a1·b2 − a2·b1), unreduced; its solution set is the
  /// semigroup generated by the interval.
  Instance instance() const;

 private:
  Rational p_;
  Rational q_;
};

/// Smallest positive integer that is a sum of rationals from [p, q].
Integer interval_multiplicity(const RationalInterval& iv);

/// Scan oracle: first n >= 1 with some k >= 1 and k·p <= n <= k·q.
Integer interval_multiplicity_naive(const RationalInterval& iv);

/// The interval [(2b²+1)/(2ab), (2b²−1)/(2b(a−1))] whose semigroup's
/// multiplicity m gives F(a, b, 1) = b − m. Requires 2 <= a < b.
RationalInterval frobenius_interval(const Integer& a, const Integer& b);

/// Largest x with (a·x mod b) > x, via the interval semigroup above.
/// Throws std::invalid_argument unless 2 <= a < b.
Integer frobenius_f1(const Integer& a, const Integer& b);

/// Same value by scanning x = 1..b.
Integer frobenius_naive(const Integer& a, const Integer& b);

}  // namespace pmd
