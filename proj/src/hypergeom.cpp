#include "eulerleg/hypergeom.hpp"

#include <cmath>
#include <stdexcept>

#include "eulerleg/errors.hpp"

namespace eulerleg {

namespace {

void validate(const HypergeometricParams& p) {
  if (p.c <= 0.0 && p.c == std::floor(p.c)) throw std::domain_error("hyp2f1: c must not be zero or a negative integer");
  if (!(std::abs(p.x) < 1.0)) throw std::domain_error("hyp2f1: requires |x| < 1");
}

}  // namespace

double hyp2f1(const HypergeometricParams& p, double tol) {
  validate(p);
  if (!(tol > 0.0)) throw std::domain_error("hyp2f1: tol must be positive");
  constexpr int kMaxTerms = 10000;
  double term = 1.0;
  double sum = 1.0;
  bool previous_small = false;
  for (int m = 0; m < kMaxTerms; ++m) {
    term *= (p.a + m) * (p.b + m) / ((p.c + m) * (m + 1.0)) * p.x;
    sum += term;
    const bool small = std::abs(term) < tol;
    if (small && previous_small) return sum;
    previous_small = small;
  }
  throw ToleranceNotReached("hyp2f1: term cap reached", sum, std::abs(term));
}

double euler_transform_residual(const HypergeometricParams& p, double tol) {
  const double left = hyp2f1(p, tol);
  const double right = std::pow(1.0 - p.x, p.c - p.a - p.b) * hyp2f1({p.c - p.a, p.c - p.b, p.c, p.x}, tol);
  return std::abs(left - right);
}

}  // namespace eulerleg
