#pragma once

#include "eulerleg/rational.hpp"

namespace eulerleg {

/// A quadrature-backed value.
struct NumericValue {
  double value = 0.0;
  double estimated_error = 0.0;
  /// |imaginary part| discarded from a complex-arithmetic evaluation; 0 when
  /// the integrand was real.
  double imaginary_residue = 0.0;
};

/// Residual of an identity between quadrature values, with the magnitude of
/// its largest term so callers can judge it relatively.
struct IdentityResidual {
  double residual = 0.0;
  double scale = 0.0;

  double relative() const { return scale > 0.0 ? residual / scale : residual; }
};

// ---------------------------------------------------------------------------
// Laplace pair

/// (1/pi) int_0^pi (t + sqrt(t^2 - 1) cos phi)^n dphi, approximating P_n(t).
///
/// For |t| < 1 the root is i sqrt(1 - t^2) and the integral runs in complex
/// arithmetic; an imaginary part of magnitude >= tol raises ConsistencyError.
/// t = +-1 returns (+-1)^n without quadrature.
NumericValue laplace_positive(long n, double t, double tol);

/// (1/pi) int_0^pi (t + sqrt(t^2 - 1) cos phi)^(-n-1) dphi, approximating P_n(t).
///
/// The representation holds for Re t > 0. For -1 < t <= 0 the integrand has a
/// pole on or above the segment [0, pi] (at pi/2 + i asinh(|t|/sqrt(1-t^2))),
/// so the path is lifted to phi = u + i delta sin(u) with delta past the pole;
/// this is the continuation of the t > 0 integral. t < -1 is rejected with
/// std::domain_error.
NumericValue laplace_negative(long n, double t, double tol);

/// |laplace_positive - laplace_negative|, scale = max(1, |P_n(t)| estimate).
IdentityResidual jacobi_relation_residual(long n, double t, double tol);

// ---------------------------------------------------------------------------
// Euler's A-family  A_n(a, k) = int_0^pi cos(k phi) / (1 + a^2 - 2a cos phi)^n dphi

struct AFamilyPoint {
  double a = 0.0;  ///< |a| < 1
  int k = 0;       ///< harmonic order, >= 0
  long n = 0;      ///< denominator exponent; any integer
};

/// Direct quadrature of A_n(a, k). Throws std::domain_error unless |a| < 1 and k >= 0.
NumericValue a_family_direct(const AFamilyPoint& p, double tol);

/// Rational r with A_{n+1}(a, k) = pi r, from the terminating sum
///   r = a^k / (1 - a^2)^(2n+1) * sum_{j=0}^{n} binom(n+k, k+j) binom(n-k, j) a^(2j).
Rational a_family_explicit(const Rational& a, long k, long n);

/// n(n-1)(1-a^2)^2 A_{n+1} - (n-1)(2n-1)(1+a^2) A_n - (k^2 - (n-1)^2) A_{n-1}, n >= 2.
IdentityResidual a_family_difference_residual(double a, int k, long n, double tol);

/// binom(n+k, k)(1-a^2)^(-n) int Delta^n cos(k phi) - binom(k-n-1, k)(1-a^2)^(n+1) int Delta^(-n-1) cos(k phi).
IdentityResidual a_family_functional_residual(double a, int k, long n, double tol);

// ---------------------------------------------------------------------------
// Integrals of x^n / sqrt(a^2 - 2bx + cx^2) between the roots of the quadratic

struct E606Params {
  double a = 1.0;  ///< > 0
  double b = 0.0;
  double c = 1.0;  ///< > 0, with b^2 - a^2 c > 0
};

/// int x^n dx / sqrt|a^2 - 2bx + cx^2| over the interval between the roots.
/// Under x = b/c + h u, h = sqrt(b^2 - a^2 c)/c, this is
/// (1/sqrt(c)) int_{-1}^{1} (b/c + h u)^n du / sqrt(1 - u^2), which
/// Gauss-Chebyshev integrates exactly with ceil((n+2)/2) nodes. The complex
/// integral over the same interval is i times this value.
NumericValue e606_G_mod(const E606Params& p, long n, double tol);

/// n a^2 G(n-1) - (2n+1) b G(n) + (n+1) c G(n+1), n >= 1.
IdentityResidual e606_recurrence_residual(const E606Params& p, long n, double tol);

/// P_n(t) = G(n; 1, t, 1) / log(-1) with log(-1) = i pi, i.e. e606_G_mod / pi.
/// Requires t > 1 (real distinct endpoints); std::domain_error otherwise.
NumericValue e606_legendre(long n, double t, double tol);

}  // namespace eulerleg
