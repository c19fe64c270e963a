#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eulerleg {

/// Exact arbitrary-precision fraction. Always stored in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(runtime/explicit)
  Rational(int value) : value_(value) {}   // NOLINT(runtime/explicit)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);
  explicit Rational(double value);

  /// Parses "p", "p/q", or a finite decimal such as "-1.25" or "3e-2".
  /// Decimals denote their exact value (0.1 is 1/10, not the nearest double).
  static Rational parse(std::string_view text);

  const mpq_class& get() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  /// Nearest double (round-half-even).
  double to_double() const;
  /// "p/q", or "p" when the denominator is one.
  std::string to_string() const;
  /// Decimal rendering rounded to `digits` significant digits, in %.*g style.
  std::string to_decimal(int digits = 17) const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

Rational abs(const Rational& r);
/// r^e for any integer exponent; r must be nonzero when e < 0.
Rational pow(const Rational& r, long exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Generalized binomial coefficient top*(top-1)*...*(top-k+1)/k!, defined for
/// any rational upper argument and k >= 0.
Rational binomial_general(const Rational& top, long k);

}  // namespace eulerleg
