#pragma once

namespace eulerleg {

struct HypergeometricParams {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;  ///< not zero or a negative integer
  double x = 0.0;  ///< |x| < 1
};

/// Partial sum of 2F1(a, b; c; x) = sum_m (a)_m (b)_m / (c)_m x^m / m!, stopped
/// once two consecutive terms are both below tol in magnitude. Throws
/// ToleranceNotReached after 10000 terms.
double hyp2f1(const HypergeometricParams& p, double tol);

/// |2F1(a,b;c;x) - (1-x)^(c-a-b) 2F1(c-a, c-b; c; x)|
double euler_transform_residual(const HypergeometricParams& p, double tol);

}  // namespace eulerleg
