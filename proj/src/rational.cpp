#include "eulerleg/rational.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace eulerleg {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(double value) {
  if (!std::isfinite(value)) throw std::domain_error("Rational: non-finite double");
  value_ = mpq_class(value);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto bad = [&] { return std::invalid_argument("not a rational literal: '" + std::string(text) + "'"); };
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) throw bad();

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) throw bad();
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (negative) n = -n;
    return Rational(mpq_class(n, d));
  }

  // Decimal: [sign] digits [. digits] [e [sign] digits]
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp.empty() && (exp.front() == '-' || exp.front() == '+')) {
      exp_negative = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!all_digits(exp) || exp.size() > 6) throw bad();
    exponent = std::stol(std::string(exp));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw bad();
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) throw bad();
    digits = std::string(s);
  }
  mpq_class q{mpz_class(digits, 10)};
  if (exponent > 0) q *= pow10(static_cast<unsigned long>(exponent));
  if (exponent < 0) q /= pow10(static_cast<unsigned long>(-exponent));
  q.canonicalize();
  if (negative) q = -q;
  return Rational(q);
}

double Rational::to_double() const {
  // mpq_get_d truncates toward zero; pick the nearer of it and its outward neighbour.
  const double truncated = value_.get_d();
  if (!std::isfinite(truncated)) return truncated;
  const double outward = std::nextafter(truncated, sign() >= 0 ? std::numeric_limits<double>::infinity()
                                                               : -std::numeric_limits<double>::infinity());
  if (!std::isfinite(outward)) return truncated;
  const mpq_class d_lo = abs(value_ - mpq_class(truncated));
  const mpq_class d_hi = abs(mpq_class(outward) - value_);
  const int c = cmp(d_lo, d_hi);
  if (c < 0) return truncated;
  if (c > 0) return outward;
  // tie: even mantissa
  std::int64_t bits = 0;
  std::memcpy(&bits, &truncated, sizeof bits);
  return (bits & 1) == 0 ? truncated : outward;
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 1) digits = 1;
  if (is_zero()) return "0";
  mpz_class num = abs(value_.get_num());
  const mpz_class& den = value_.get_den();

  // Find exponent e10 with 10^e10 <= |q| < 10^(e10+1).
  long e10 = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  const auto scaled_ge = [&](long e) {  // |q| >= 10^e
    return e >= 0 ? num >= den * pow10(static_cast<unsigned long>(e))
                  : num * pow10(static_cast<unsigned long>(-e)) >= den;
  };
  while (!scaled_ge(e10)) --e10;
  while (scaled_ge(e10 + 1)) ++e10;

  // mantissa = round(|q| * 10^(digits-1-e10)), half-even.
  const long shift = digits - 1 - e10;
  mpz_class n = num, d = den;
  if (shift >= 0)
    n *= pow10(static_cast<unsigned long>(shift));
  else
    d *= pow10(static_cast<unsigned long>(-shift));
  mpz_class quotient, remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  const int half = cmp(2 * remainder, d);
  if (half > 0 || (half == 0 && mpz_odd_p(quotient.get_mpz_t()))) ++quotient;
  if (quotient == pow10(static_cast<unsigned long>(digits))) {
    quotient /= 10;
    ++e10;
  }
  std::string mant = quotient.get_str();

  // %g layout: fixed when -4 <= e10 < digits, otherwise scientific; trailing zeros trimmed.
  const auto trim = [](std::string s) {
    if (s.find('.') != std::string::npos) {
      while (s.back() == '0') s.pop_back();
      if (s.back() == '.') s.pop_back();
    }
    return s;
  };
  std::string out;
  if (e10 >= -4 && e10 < digits) {
    if (e10 >= 0) {
      out = mant.substr(0, static_cast<std::size_t>(e10 + 1)) + "." + mant.substr(static_cast<std::size_t>(e10 + 1));
    } else {
      out = "0." + std::string(static_cast<std::size_t>(-e10 - 1), '0') + mant;
    }
    out = trim(out);
  } else {
    out = trim(mant.substr(0, 1) + "." + mant.substr(1));
    const long ae = e10 < 0 ? -e10 : e10;
    out += (e10 < 0 ? "e-" : "e+");
    if (ae < 10) out += "0";
    out += std::to_string(ae);
  }
  return (sign() < 0 ? "-" : "") + out;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, long exponent) {
  if (exponent < 0) return Rational(1) / pow(r, -exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), r.get().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational binomial_general(const Rational& top, long k) {
  if (k < 0) throw std::domain_error("binomial_general: k must be nonnegative");
  Rational result(1);
  for (long i = 0; i < k; ++i) {
    result *= top - Rational(i);
    result /= Rational(i + 1);
  }
  return result;
}

}  // namespace eulerleg
