#include "eulerleg/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "eulerleg/errors.hpp"
#include "eulerleg/quadrature.hpp"

namespace eulerleg {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;
// Quadrature is asked for this fraction of the caller's tolerance (relative to
// the integrand scale); the rounding floor in integrate_to_tolerance stops it
// once the rule has converged to double precision.
constexpr double kQuadratureMargin = 1e-3;

template <typename T>
T integer_power(T base, long exponent) {
  if (exponent < 0) return T(1) / integer_power(base, -exponent);
  T result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

void require_degree(long n, const char* what) {
  if (n < 0) throw std::domain_error(std::string(what) + ": n must be nonnegative");
}

void require_tol(double tol, const char* what) {
  if (!(tol > 0.0)) throw std::domain_error(std::string(what) + ": tol must be positive");
}

NumericValue finish_legendre(const IntegrationResult& r, double tol, const char* what) {
  NumericValue out{r.value.real() / kPi, r.estimated_error / kPi, std::abs(r.value.imag()) / kPi};
  if (out.imaginary_residue >= tol)
    throw ConsistencyError(std::string(what) + ": imaginary residue " + std::to_string(out.imaginary_residue) +
                           " exceeds tolerance");
  return out;
}

std::optional<NumericValue> endpoint_value(long n, double t) {
  if (t == 1.0) return NumericValue{1.0, 0.0, 0.0};
  if (t == -1.0) return NumericValue{n % 2 == 0 ? 1.0 : -1.0, 0.0, 0.0};
  return std::nullopt;
}

/// sqrt(t^2 - 1) on the branch used by both Laplace integrals.
Complex laplace_root(double t) {
  return std::abs(t) > 1.0 ? Complex(std::sqrt(t * t - 1.0), 0.0) : Complex(0.0, std::sqrt(1.0 - t * t));
}

}  // namespace

NumericValue laplace_positive(long n, double t, double tol) {
  require_degree(n, "laplace_positive");
  require_tol(tol, "laplace_positive");
  if (auto v = endpoint_value(n, t)) return *v;
  const Complex root = laplace_root(t);
  const double bound = std::pow(std::abs(t) + std::abs(root), static_cast<double>(n));
  const auto integrand = [&](double phi) { return integer_power(Complex(t) + root * std::cos(phi), n); };
  const auto r = integrate_to_tolerance(integrand, 0.0, kPi, RuleKind::gauss_legendre,
                                        kQuadratureMargin * tol * kPi * std::max(1.0, bound));
  return finish_legendre(r, tol, "laplace_positive");
}

NumericValue laplace_negative(long n, double t, double tol) {
  require_degree(n, "laplace_negative");
  require_tol(tol, "laplace_negative");
  if (auto v = endpoint_value(n, t)) return *v;
  if (t < -1.0) throw std::domain_error("laplace_negative: requires t > -1");
  const Complex root = laplace_root(t);
  const long power = -n - 1;

  if (t > 0.0) {
    // Smallest |base| on the path is t - sqrt(t^2-1) for t > 1 and t for 0 < t < 1.
    const double smallest = t > 1.0 ? t - root.real() : t;
    const double bound = std::pow(smallest, static_cast<double>(power));
    const auto integrand = [&](double phi) { return integer_power(Complex(t) + root * std::cos(phi), power); };
    const auto r = integrate_to_tolerance(integrand, 0.0, kPi, RuleKind::gauss_legendre,
                                          kQuadratureMargin * tol * kPi * std::max(1.0, bound));
    return finish_legendre(r, tol, "laplace_negative");
  }

  // -1 < t <= 0: base vanishes at phi = pi/2 + i asinh(|t|/s), s = sqrt(1-t^2).
  const double s = root.imag();
  const double lift = std::asinh(std::abs(t) / s) + 1.0;
  const auto integrand = [&](double u) {
    const Complex phi(u, lift * std::sin(u));
    const Complex dphi(1.0, lift * std::cos(u));
    return integer_power(Complex(t) + root * std::cos(phi), power) * dphi;
  };
  const auto r =
      integrate_to_tolerance(integrand, 0.0, kPi, RuleKind::gauss_legendre, kQuadratureMargin * tol * kPi);
  return finish_legendre(r, tol, "laplace_negative");
}

IdentityResidual jacobi_relation_residual(long n, double t, double tol) {
  const NumericValue pos = laplace_positive(n, t, tol);
  const NumericValue neg = laplace_negative(n, t, tol);
  return {std::abs(pos.value - neg.value), std::max({1.0, std::abs(pos.value), std::abs(neg.value)})};
}

// ---------------------------------------------------------------------------

NumericValue a_family_direct(const AFamilyPoint& p, double tol) {
  if (!(std::abs(p.a) < 1.0)) throw std::domain_error("a_family_direct: requires |a| < 1");
  if (p.k < 0) throw std::domain_error("a_family_direct: harmonic order must be nonnegative");
  require_tol(tol, "a_family_direct");
  if (p.a == 0.0) return {p.k == 0 ? kPi : 0.0, 0.0, 0.0};

  const double a = p.a;
  const double near = (1.0 - std::abs(a)) * (1.0 - std::abs(a));
  const double far = (1.0 + std::abs(a)) * (1.0 + std::abs(a));
  const double bound = kPi * std::max(std::pow(near, static_cast<double>(-p.n)), std::pow(far, static_cast<double>(-p.n)));
  const auto integrand = [&](double phi) {
    const double half_sine = std::sin(0.5 * phi);
    const double delta = (1.0 - a) * (1.0 - a) + 4.0 * a * half_sine * half_sine;  // 1 + a^2 - 2a cos phi
    return Complex(std::cos(p.k * phi) * integer_power(delta, -p.n), 0.0);
  };
  const auto r =
      integrate_to_tolerance(integrand, 0.0, kPi, RuleKind::gauss_legendre, kQuadratureMargin * tol * std::max(1.0, bound));
  return {r.value.real(), r.estimated_error, 0.0};
}

Rational a_family_explicit(const Rational& a, long k, long n) {
  if (!(abs(a) < Rational(1))) throw std::domain_error("a_family_explicit: requires |a| < 1");
  if (k < 0 || n < 0) throw std::domain_error("a_family_explicit: k and n must be nonnegative");
  const Rational a2 = a * a;
  Rational v(0);
  // binom(n+k, k+j) vanishes for j > n, which terminates the sum.
  for (long j = 0; j <= n; ++j)
    v += binomial_general(Rational(n + k), k + j) * binomial_general(Rational(n - k), j) * pow(a2, j);
  return pow(a, k) / pow(Rational(1) - a2, 2 * n + 1) * v;
}

IdentityResidual a_family_difference_residual(double a, int k, long n, double tol) {
  if (n < 2) throw std::domain_error("a_family_difference_residual: n must be at least 2");
  const double up = a_family_direct({a, k, n + 1}, tol).value;
  const double here = a_family_direct({a, k, n}, tol).value;
  const double down = a_family_direct({a, k, n - 1}, tol).value;
  const double nd = static_cast<double>(n);
  const double one_minus = 1.0 - a * a;
  const double lhs = nd * (nd - 1.0) * one_minus * one_minus * up;
  const double t1 = (nd - 1.0) * (2.0 * nd - 1.0) * (1.0 + a * a) * here;
  const double t2 = (static_cast<double>(k) * k - (nd - 1.0) * (nd - 1.0)) * down;
  return {std::abs(lhs - t1 - t2), std::max({std::abs(lhs), std::abs(t1), std::abs(t2)})};
}

IdentityResidual a_family_functional_residual(double a, int k, long n, double tol) {
  if (n < 0) throw std::domain_error("a_family_functional_residual: n must be nonnegative");
  const double left_binomial = binomial_general(Rational(n + k), k).to_double();
  const double right_binomial = binomial_general(Rational(k - n - 1), k).to_double();
  const double one_minus = 1.0 - a * a;
  const double left_factor = left_binomial * std::pow(one_minus, static_cast<double>(-n));
  const double right_factor = right_binomial * std::pow(one_minus, static_cast<double>(n + 1));
  const double left = left_factor * a_family_direct({a, k, -n}, tol).value;
  const double right = right_factor * a_family_direct({a, k, n + 1}, tol).value;
  // both sides vanish for k > n
  const double bound = std::max(std::abs(left_factor) * a_family_direct({a, 0, -n}, tol).value,
                                std::abs(right_factor) * a_family_direct({a, 0, n + 1}, tol).value);
  return {std::abs(left - right), std::max({std::abs(left), std::abs(right), bound})};
}

// ---------------------------------------------------------------------------

namespace {

void validate(const E606Params& p) {
  if (!(p.a > 0.0) || !(p.c > 0.0)) throw std::domain_error("E606 integral: requires a > 0 and c > 0");
  if (!(p.b * p.b - p.a * p.a * p.c > 0.0))
    throw std::domain_error("E606 integral: requires b^2 - a^2 c > 0 (real distinct endpoints)");
}

double chebyshev_moment(const E606Params& p, long n, int nodes) {
  const auto rule = cached_rule(RuleKind::gauss_chebyshev_1, nodes);
  const double center = p.b / p.c;
  const double h = std::sqrt(p.b * p.b - p.a * p.a * p.c) / p.c;
  return rule->apply([&](double u) { return integer_power(center + h * u, n); }) / std::sqrt(p.c);
}

}  // namespace

NumericValue e606_G_mod(const E606Params& p, long n, double tol) {
  require_degree(n, "e606_G_mod");
  require_tol(tol, "e606_G_mod");
  validate(p);
  const int nodes = static_cast<int>((n + 3) / 2);  // ceil((n+2)/2)
  const double value = chebyshev_moment(p, n, nodes);
  // Both rules are exact for this degree; their gap measures rounding.
  const double check = chebyshev_moment(p, n, nodes + 1);
  return {value, std::abs(value - check), 0.0};
}

IdentityResidual e606_recurrence_residual(const E606Params& p, long n, double tol) {
  if (n < 1) throw std::domain_error("e606_recurrence_residual: n must be at least 1");
  const double down = e606_G_mod(p, n - 1, tol).value;
  const double here = e606_G_mod(p, n, tol).value;
  const double up = e606_G_mod(p, n + 1, tol).value;
  const double nd = static_cast<double>(n);
  const double t0 = nd * p.a * p.a * down;
  const double t1 = (2.0 * nd + 1.0) * p.b * here;
  const double t2 = (nd + 1.0) * p.c * up;
  return {std::abs(t0 - t1 + t2), std::max({std::abs(t0), std::abs(t1), std::abs(t2)})};
}

NumericValue e606_legendre(long n, double t, double tol) {
  if (!(t > 1.0)) throw std::domain_error("e606_legendre: requires t > 1");
  const NumericValue g = e606_G_mod({1.0, t, 1.0}, n, tol);
  return {g.value / kPi, g.estimated_error / kPi, 0.0};
}

}  // namespace eulerleg
