#pragma once

#include <utility>
#include <vector>

#include "eulerleg/polynomial.hpp"
#include "eulerleg/rational.hpp"

namespace eulerleg {

/// P_n(t) from (k+1) P_{k+1} = (2k+1) t P_k - k P_{k-1}, P_0 = 1, P_1 = t.
///
/// Works for any scalar with ring operations and division by an integer-valued
/// Scalar: Rational gives exact values, double and std::complex<double> give
/// floating-point ones.
template <typename Scalar>
Scalar legendre_value(long n, const Scalar& t) {
  Scalar previous(1);
  if (n == 0) return previous;
  Scalar current = t;
  for (long k = 1; k < n; ++k) {
    Scalar next = (Scalar(2 * k + 1) * t * current - Scalar(k) * previous) / Scalar(k + 1);
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

/// Exact P_n as a polynomial in t. Throws std::domain_error for n < 0.
RationalPolynomial legendre_poly(long n);

/// Exact P_n(t) in O(n) rational operations. Throws std::domain_error for n < 0.
Rational legendre_eval(long n, const Rational& t);

struct ValueAndDerivative {
  double value;
  double derivative;
};

/// (P_n(x), P_n'(x)) in double precision. The derivative uses
/// (1 - x^2) P_n' = n (P_{n-1} - x P_n) away from x = +-1 and the exact
/// endpoint value P_n'(+-1) = (+-1)^(n-1) n(n+1)/2 there. n = 0 gives (1, 0).
ValueAndDerivative legendre_eval_with_derivative(long n, double x);

/// Exact solution of the coefficient-matching identity obtained by
/// differentiating
///   int x^n dx / s = P * artanh((x - t)/s) + Q_n(x) * s,   s = sqrt(1 - 2xt + x^2),
/// namely P + Q_n'(x) (1 - 2xt + x^2) + Q_n(x) (x - t) = x^n.
struct PrimitiveSolveResult {
  Rational legendre_value;          ///< the constant P, equal to P_n(t)
  std::vector<Rational> q_coefficients;  ///< Q_n in powers of x, degree n - 1 (empty for n = 0)
};

PrimitiveSolveResult primitive_solve(long n, const Rational& t);

/// Left side of the coefficient-matching identity minus x^n, as a polynomial
/// in x. Identically zero for a correct solve.
RationalPolynomial primitive_identity_residual(long n, const Rational& t, const PrimitiveSolveResult& solved);

}  // namespace eulerleg
