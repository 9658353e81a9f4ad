#include "sigatoms/rational.hpp"

#include <ostream>

#include "sigatoms/error.hpp"

namespace sigatoms {

namespace {

bool parse_integer(std::string_view text, bool allow_sign, mpz_class& out) {
  if (text.empty()) return false;
  std::size_t start = 0;
  if (allow_sign && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational::Rational(mpz_class num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw Error(ErrorKind::ZeroDenominator, "zero denominator");
  reduce();
}

Rational normalize_rational(const mpz_class& n, const mpz_class& d) { return Rational(n, d); }

Rational Rational::pow2_inverse(unsigned long exponent) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, exponent);
  return Rational(mpz_class(1), den);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  mpz_class num;
  mpz_class den(1);
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, true, num)) {
      throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    }
  } else {
    if (!parse_integer(text.substr(0, slash), true, num) ||
        !parse_integer(text.substr(slash + 1), false, den)) {
      throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    }
    if (den == 0) {
      throw Error(ErrorKind::Parse, "rational '" + std::string(text) + "' has zero denominator");
    }
  }
  return Rational(num, den);
}

void Rational::reduce() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  reduce();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  reduce();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw Error(ErrorKind::ZeroDenominator, "zero denominator");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  reduce();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const { return num_.get_str() + "/" + den_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace sigatoms
