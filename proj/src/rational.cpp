#include "pmd/rational.hpp"

#include <stdexcept>

namespace pmd {

namespace {

void require_positive_divisor(const Integer& q) {
  if (sgn(q) <= 0) {
    throw std::invalid_argument("divisor must be positive");
  }
}

bool is_decimal_integer(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) {
    return false;
  }
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      return false;
    }
  }
  return true;
}

}  // namespace

Integer rem(const Integer& m, const Integer& n) {
  require_positive_divisor(n);
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer floor_div(const Integer& p, const Integer& q) {
  require_positive_divisor(q);
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  return r;
}

Integer ceil_div(const Integer& p, const Integer& q) {
  require_positive_divisor(q);
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  return r;
}

Integer gcd(const Integer& x, const Integer& y) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

Rational::Rational(const Integer& num, const Integer& den) : num_(num), den_(den) {
  if (den_ == 0) {
    throw std::invalid_argument("denominator must be non-zero");
  }
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

std::string Rational::to_string() const {
  if (den_ == 1) {
    return num_.get_str();
  }
  return num_.get_str() + "/" + den_.get_str();
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  Integer lhs = x.num_ * y.den_;
  Integer rhs = y.num_ * x.den_;
  int c = ::cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational operator+(const Rational& x, const Rational& y) {
  return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
}

Rational operator-(const Rational& x, const Rational& y) {
  return {x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_};
}

Rational operator*(const Rational& x, const Rational& y) {
  return {x.num_ * y.num_, x.den_ * y.den_};
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.num_ == 0) {
    throw std::invalid_argument("division by zero rational");
  }
  return {x.num_ * y.den_, x.den_ * y.num_};
}

std::strong_ordering cmp(const Rational& x, const Rational& y) { return x <=> y; }

Integer floor(const Rational& x) { return floor_div(x.num(), x.den()); }

Integer ceil(const Rational& x) { return ceil_div(x.num(), x.den()); }

Integer parse_integer(std::string_view text) {
  if (!is_decimal_integer(text)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') {
    text.remove_prefix(1);
  }
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational");
  }
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return {num, den};
}

}  // namespace pmd
