#include "eulerleg/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "eulerleg/errors.hpp"
#include "eulerleg/recurrence.hpp"

namespace eulerleg {

const char* to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::gauss_legendre:
      return "gauss-legendre";
    case RuleKind::gauss_chebyshev_1:
      return "gauss-chebyshev-1";
  }
  return "unknown";
}

QuadratureRule gauss_legendre_rule(int m) {
  if (m < 1) throw std::domain_error("gauss_legendre_rule: m must be at least 1");
  QuadratureRule rule{RuleKind::gauss_legendre, Eigen::VectorXd(m), Eigen::VectorXd(m)};
  constexpr double kResidual = 1e-14;
  constexpr int kMaxIterations = 100;

  // Roots are symmetric: solve the upper half (k = 1 is the largest root)
  // and mirror; odd m has the exact root 0.
  for (int k = 1; k <= m / 2; ++k) {
    double x = std::cos(std::numbers::pi * (k - 0.25) / (m + 0.5));
    ValueAndDerivative pd = legendre_eval_with_derivative(m, x);
    bool converged = false;
    for (int it = 0; it < kMaxIterations; ++it) {
      const double step = pd.value / pd.derivative;
      x -= step;
      pd = legendre_eval_with_derivative(m, x);
      // Once the step reaches rounding level, |P_m(x)| is as small as double
      // evaluation of the recurrence can make it.
      if (std::abs(pd.value) < kResidual || std::abs(step) <= 4 * std::numeric_limits<double>::epsilon()) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw std::runtime_error("gauss_legendre_rule: Newton did not converge for m = " + std::to_string(m));
    const double w = 2.0 / ((1.0 - x * x) * pd.derivative * pd.derivative);
    rule.nodes[m - k] = x;
    rule.nodes[k - 1] = -x;
    rule.weights[m - k] = w;
    rule.weights[k - 1] = w;
  }
  if (m % 2 == 1) {
    const int mid = m / 2;
    const double dp = legendre_eval_with_derivative(m, 0.0).derivative;
    rule.nodes[mid] = 0.0;
    rule.weights[mid] = 2.0 / (dp * dp);
  }
  return rule;
}

QuadratureRule gauss_chebyshev_rule(int m) {
  if (m < 1) throw std::domain_error("gauss_chebyshev_rule: m must be at least 1");
  QuadratureRule rule{RuleKind::gauss_chebyshev_1, Eigen::VectorXd(m),
                      Eigen::VectorXd::Constant(m, std::numbers::pi / m)};
  for (int k = 1; k <= m / 2; ++k) {
    const double x = std::cos((2 * k - 1) * std::numbers::pi / (2.0 * m));
    rule.nodes[m - k] = x;
    rule.nodes[k - 1] = -x;
  }
  if (m % 2 == 1) rule.nodes[m / 2] = 0.0;
  return rule;
}

std::shared_ptr<const QuadratureRule> cached_rule(RuleKind kind, int m) {
  static std::mutex mutex;
  static std::map<std::pair<RuleKind, int>, std::shared_ptr<const QuadratureRule>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({kind, m}); it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const QuadratureRule>(kind == RuleKind::gauss_legendre ? gauss_legendre_rule(m)
                                                                                       : gauss_chebyshev_rule(m));
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(kind, m), std::move(rule)).first->second;
}

IntegrationResult integrate_to_tolerance(const ComplexIntegrand& f, double lo, double hi, RuleKind kind, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("integrate_to_tolerance: tol must be positive");
  constexpr int kFirst = 16;
  constexpr int kCeiling = 4096;
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double jacobian = kind == RuleKind::gauss_legendre ? half : 1.0;

  std::complex<double> previous{};
  double last_difference = std::numeric_limits<double>::infinity();
  for (int m = kFirst; m <= kCeiling; m *= 2) {
    const auto rule = cached_rule(kind, m);
    std::complex<double> sum{};
    double l1 = 0.0;
    for (Eigen::Index k = 0; k < rule->size(); ++k) {
      const std::complex<double> v = rule->weights[k] * f(mid + half * rule->nodes[k]);
      sum += v;
      l1 += std::abs(v);
    }
    sum *= jacobian;
    l1 *= std::abs(jacobian);
    if (m > kFirst) {
      last_difference = std::abs(sum - previous);
      const double floor = 64 * std::numeric_limits<double>::epsilon() * l1;
      if (last_difference < tol || last_difference <= floor) return {sum, last_difference, m};
    }
    previous = sum;
  }
  throw ToleranceNotReached("integrate_to_tolerance: no convergence with " + std::to_string(kCeiling) + " nodes",
                            previous, last_difference);
}

}  // namespace eulerleg
