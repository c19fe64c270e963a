#include "eulerleg/trinomial.hpp"

#include <stdexcept>
#include <string>

namespace eulerleg {

Rational central_coeff(const TrinomialParams& params, long n) {
  if (n < 0) throw std::domain_error("central_coeff: n must be nonnegative, got " + std::to_string(n));
  // multinomial n!/(j! j! (n-2j)!) updated term to term:
  // m_{j+1} = m_j (n-2j)(n-2j-1) / (j+1)^2
  Rational sum(0);
  Rational multinomial(1);
  for (long j = 0; 2 * j <= n; ++j) {
    sum += multinomial * pow(params.a, j) * pow(params.b, n - 2 * j) * pow(params.c, j);
    multinomial *= Rational((n - 2 * j) * (n - 2 * j - 1), (j + 1) * (j + 1));
  }
  return sum;
}

RationalPolynomial legendre_via_trinomial(long n) {
  if (n < 0) throw std::domain_error("legendre_via_trinomial: n must be nonnegative, got " + std::to_string(n));
  using PolyInX = Polynomial<RationalPolynomial>;
  const RationalPolynomial a{Rational(-1, 2), Rational(1, 2)};  // (t - 1)/2
  const RationalPolynomial b{Rational(0), Rational(1)};         // t
  const RationalPolynomial c{Rational(1, 2), Rational(1, 2)};   // (t + 1)/2
  const PolyInX trinomial(std::vector<RationalPolynomial>{a, b, c}, "x");

  PolyInX power(std::vector<RationalPolynomial>{RationalPolynomial{Rational(1)}}, "x");
  for (long i = 0; i < n; ++i) power = power * trinomial;
  return power[static_cast<std::size_t>(n)];
}

std::vector<Rational> gf_coefficients(const Rational& b, const Rational& disc, long count) {
  if (count < 1) throw std::domain_error("gf_coefficients: count must be at least 1");
  const auto size = static_cast<std::size_t>(count);
  std::vector<Rational> result(size);
  std::vector<Rational> u_power(size);  // u^j truncated, starts at u^0 = 1
  u_power[0] = Rational(1);
  const Rational u1 = Rational(-2) * b;
  const Rational& u2 = disc;
  const Rational minus_half(-1, 2);
  Rational binomial(1);  // binom(-1/2, j)

  for (std::size_t j = 0; j < size; ++j) {
    // u^j has lowest term x^j, so only j < count contributes.
    for (std::size_t k = j; k < size; ++k) result[k] += binomial * u_power[k];
    binomial *= (minus_half - Rational(static_cast<long>(j))) / Rational(static_cast<long>(j + 1));
    // u^{j+1} = u^j * (u1 x + u2 x^2), truncated at degree count-1
    std::vector<Rational> next(size);
    for (std::size_t k = j; k < size; ++k) {
      if (u_power[k].is_zero()) continue;
      if (k + 1 < size) next[k + 1] += u1 * u_power[k];
      if (k + 2 < size) next[k + 2] += u2 * u_power[k];
    }
    u_power = std::move(next);
  }
  return result;
}

Rational section22_residual(const TrinomialParams& params, long n) {
  if (n < 2) throw std::domain_error("section22_residual: n must be at least 2, got " + std::to_string(n));
  const Rational bn = central_coeff(params, n);
  const Rational bn1 = central_coeff(params, n - 1);
  const Rational bn2 = central_coeff(params, n - 2);
  return Rational(n) * bn - Rational(2 * n - 1) * params.b * bn1 + Rational(n - 1) * params.discriminant() * bn2;
}

}  // namespace eulerleg
