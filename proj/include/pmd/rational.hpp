#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pmd {

/// Unbounded signed integer. Every quantity in the library is one of these
/// (or a ratio of two); nothing in a computation path is fixed-width.
using Integer = mpz_class;

/// Least non-negative residue of m modulo n, defined for negative m.
/// Throws std::invalid_argument when n <= 0.
Integer rem(const Integer& m, const Integer& n);

/// Largest integer <= p/q. Throws std::invalid_argument when q <= 0.
Integer floor_div(const Integer& p, const Integer& q);

/// Smallest integer >= p/q. Throws std::invalid_argument when q <= 0.
Integer ceil_div(const Integer& p, const Integer& q);

Integer gcd(const Integer& x, const Integer& y);

/// Reduced fraction num/den with den > 0 and gcd(num, den) = 1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(const Integer& value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long value) : num_(value), den_(1) {}            // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return sgn(num_); }

  std::string to_string() const;

  friend bool operator==(const Rational& x, const Rational& y) noexcept {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  /// Throws std::invalid_argument when y is zero.
  friend Rational operator/(const Rational& x, const Rational& y);

 private:
  Integer num_;
  Integer den_;
};

/// Reduced, positive-denominator representative of num/den.
/// Throws std::invalid_argument when den = 0.
inline Rational make_rational(const Integer& num, const Integer& den) { return {num, den}; }

std::strong_ordering cmp(const Rational& x, const Rational& y);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

/// Parses an optionally signed decimal integer. No surrounding whitespace, no
/// leading '+' ambiguity beyond a single sign. Throws std::invalid_argument.
Integer parse_integer(std::string_view text);

/// Parses "n" or "n/d". Rejects empty input and d = 0.
Rational parse_rational(std::string_view text);

inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace pmd
