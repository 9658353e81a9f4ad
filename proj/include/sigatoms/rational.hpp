#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sigatoms {

/// Exact fraction over arbitrary-precision integers.
///
/// Always held in lowest terms with a strictly positive denominator, so two
/// Rationals are equal iff their numerators and denominators are equal.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT(implicit)
  Rational(mpz_class num, mpz_class den);

  static Rational pow2_inverse(unsigned long exponent);
  /// Accepts "a" or "a/b" with an optional leading sign on a and b > 0.
  static Rational parse(std::string_view text);

  const mpz_class& numerator() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  int sign() const { return sgn(num_); }
  bool is_zero() const { return num_ == 0; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Always "a/b", including integers ("1/1") and zero ("0/1").
  std::string to_string() const;

 private:
  void reduce();

  mpz_class num_;
  mpz_class den_;
};

/// Reduces n/d to lowest terms with a positive denominator.
Rational normalize_rational(const mpz_class& n, const mpz_class& d);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace sigatoms
