#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "eulerleg/rational.hpp"

namespace eulerleg {

/// Dense univariate polynomial; coefficient i multiplies variable^i.
///
/// The zero polynomial has no coefficients, so degree() == size() - 1 holds
/// everywhere (degree of zero is -1). Every operation renormalizes by
/// dropping trailing zero coefficients. Scalar only needs a ring interface
/// and a value-initialized zero, so Polynomial<Polynomial<Rational>> works
/// as a polynomial in x with coefficients in Q[t].
template <typename Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coefficients, std::string variable = "t")
      : coeffs_(std::move(coefficients)), variable_(std::move(variable)) {
    normalize();
  }
  Polynomial(std::initializer_list<Scalar> coefficients) : coeffs_(coefficients) { normalize(); }

  static Polynomial constant(Scalar c, std::string variable = "t") {
    return Polynomial(std::vector<Scalar>{std::move(c)}, std::move(variable));
  }
  /// c * variable^power
  static Polynomial monomial(Scalar c, std::size_t power, std::string variable = "t") {
    std::vector<Scalar> v(power + 1);
    v[power] = std::move(c);
    return Polynomial(std::move(v), std::move(variable));
  }

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  const std::string& variable() const { return variable_; }

  /// Coefficient of variable^i; zero past the degree.
  Scalar operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar{}; }

  /// Horner evaluation at any point type the scalar can be combined with.
  template <typename Arg>
  auto operator()(const Arg& v) const {
    using Result = decltype(Scalar{} * v + Scalar{});
    Result acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial({}, variable_);
    std::vector<Scalar> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Scalar(static_cast<long>(i));
    return Polynomial(std::move(d), variable_);
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    adopt_variable(o);
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    adopt_variable(o);
    normalize();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial({}, a.variable_);
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out), a.variable_);
  }
  friend Polynomial operator*(const Scalar& s, Polynomial p) {
    for (auto& c : p.coeffs_) c = s * c;
    p.normalize();
    return p;
  }
  friend Polynomial operator*(Polynomial p, const Scalar& s) { return s * std::move(p); }

  /// Equality compares coefficients only; the variable label is informational.
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar{}) coeffs_.pop_back();
  }
  void adopt_variable(const Polynomial& o) {
    if (variable_.empty()) variable_ = o.variable_;
  }

  std::vector<Scalar> coeffs_;
  std::string variable_ = "t";
};

using RationalPolynomial = Polynomial<Rational>;

/// Renders p with a common denominator, e.g. "(35t^4 - 30t^2 + 3)/8".
std::string format_polynomial(const RationalPolynomial& p);

}  // namespace eulerleg
