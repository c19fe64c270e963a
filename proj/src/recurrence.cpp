#include "eulerleg/recurrence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace eulerleg {

namespace {

void require_nonnegative(long n, const char* what) {
  if (n < 0) throw std::domain_error(std::string(what) + ": degree must be nonnegative, got " + std::to_string(n));
}

}  // namespace

RationalPolynomial legendre_poly(long n) {
  require_nonnegative(n, "legendre_poly");
  const RationalPolynomial t{Rational(0), Rational(1)};
  RationalPolynomial previous{Rational(1)};
  if (n == 0) return previous;
  RationalPolynomial current = t;
  for (long k = 1; k < n; ++k) {
    RationalPolynomial next = Rational(2 * k + 1, k + 1) * (t * current) - Rational(k, k + 1) * previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

Rational legendre_eval(long n, const Rational& t) {
  require_nonnegative(n, "legendre_eval");
  return legendre_value<Rational>(n, t);
}

ValueAndDerivative legendre_eval_with_derivative(long n, double x) {
  require_nonnegative(n, "legendre_eval_with_derivative");
  if (n == 0) return {1.0, 0.0};
  double previous = 1.0;
  double current = x;
  for (long k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0) * x * current - static_cast<double>(k) * previous) / (k + 1.0);
    previous = current;
    current = next;
  }
  const double nd = static_cast<double>(n);
  if (x == 1.0 || x == -1.0) {
    const double endpoint = nd * (nd + 1.0) / 2.0;
    return {current, (x > 0.0 || n % 2 == 1) ? endpoint : -endpoint};
  }
  return {current, nd * (previous - x * current) / (1.0 - x * x)};
}

PrimitiveSolveResult primitive_solve(long n, const Rational& t) {
  require_nonnegative(n, "primitive_solve");
  if (n == 0) return {Rational(1), {}};

  // Coefficient of x^m in the identity:
  //   m q_{m-1} - (2m+1) t q_m + (m+1) q_{m+1} + [m == 0] P = [m == n].
  // Top equation (m = n) fixes q_{n-1}; each lower m fixes q_{m-1}; m = 0 fixes P.
  std::vector<Rational> q(static_cast<std::size_t>(n) + 2);  // q[n], q[n+1] stay zero
  const auto idx = [](long i) { return static_cast<std::size_t>(i); };
  for (long m = n; m >= 1; --m) {
    Rational rhs = (m == n) ? Rational(1) : Rational(0);
    rhs += Rational(2 * m + 1) * t * q[idx(m)] - Rational(m + 1) * q[idx(m + 1)];
    q[idx(m - 1)] = rhs / Rational(m);
  }
  Rational p = t * q[0] - q[1];
  q.resize(idx(n));
  return {std::move(p), std::move(q)};
}

RationalPolynomial primitive_identity_residual(long n, const Rational& t, const PrimitiveSolveResult& solved) {
  require_nonnegative(n, "primitive_identity_residual");
  const RationalPolynomial q(solved.q_coefficients, "x");
  const RationalPolynomial quadratic({Rational(1), Rational(-2) * t, Rational(1)}, "x");
  const RationalPolynomial linear({-t, Rational(1)}, "x");
  return RationalPolynomial::constant(solved.legendre_value, "x") + q.derivative() * quadratic + q * linear -
         RationalPolynomial::monomial(Rational(1), static_cast<std::size_t>(n), "x");
}

}  // namespace eulerleg
