#pragma once

#include <vector>

#include "eulerleg/polynomial.hpp"
#include "eulerleg/rational.hpp"

namespace eulerleg {

/// Coefficients of the trinomial a + b x + c x^2.
struct TrinomialParams {
  Rational a;
  Rational b;
  Rational c;

  Rational discriminant() const { return b * b - Rational(4) * a * c; }
};

/// B_n: coefficient of x^n in (a + b x + c x^2)^n, by the closed sum
/// sum_j n!/(j! j! (n-2j)!) a^j b^(n-2j) c^j.
Rational central_coeff(const TrinomialParams& params, long n);

/// P_n(t) as the coefficient of x^n in ((t-1)/2 + t x + ((t+1)/2) x^2)^n,
/// expanded as a polynomial in x over Q[t].
RationalPolynomial legendre_via_trinomial(long n);

/// First `count` Taylor coefficients of (1 - 2 b x + disc x^2)^(-1/2), built
/// by composing the binomial series of (1 + u)^(-1/2) with u = -2 b x + disc x^2.
/// Independent of any three-term recurrence.
std::vector<Rational> gf_coefficients(const Rational& b, const Rational& disc, long count);

/// n B_n - (2n-1) b B_{n-1} + (n-1)(b^2 - 4ac) B_{n-2}. Zero for every
/// trinomial; with b^2 - 4ac = 1 this is the relation r = bq + ((n-1)/n)(bq - p).
Rational section22_residual(const TrinomialParams& params, long n);

}  // namespace eulerleg
