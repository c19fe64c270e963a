#pragma once

#include <complex>
#include <functional>
#include <memory>

#include <Eigen/Core>

namespace eulerleg {

enum class RuleKind {
  gauss_legendre,     ///< weight 1 on [-1, 1]
  gauss_chebyshev_1,  ///< weight 1/sqrt(1 - u^2) on [-1, 1]
};

const char* to_string(RuleKind kind);

/// Nodes in (-1, 1), strictly increasing, with positive weights.
struct QuadratureRule {
  RuleKind kind;
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;

  Eigen::Index size() const { return nodes.size(); }

  /// sum_k w_k f(x_k)
  template <typename F>
  auto apply(F&& f) const {
    using Result = decltype(f(0.0));
    Result acc{};
    for (Eigen::Index k = 0; k < nodes.size(); ++k) acc += weights[k] * f(nodes[k]);
    return acc;
  }
};

/// m-point Gauss-Legendre rule. Nodes are roots of P_m found by Newton
/// iteration from cos(pi (k - 1/4)/(m + 1/2)); w_k = 2/((1 - x_k^2) P_m'(x_k)^2).
/// Throws std::runtime_error if Newton fails to converge in 100 steps.
QuadratureRule gauss_legendre_rule(int m);

/// m-point Gauss-Chebyshev (first kind): nodes cos((2k-1) pi/(2m)), weights pi/m.
QuadratureRule gauss_chebyshev_rule(int m);

/// Shared, immutable rule from a process-wide cache. Thread-safe.
std::shared_ptr<const QuadratureRule> cached_rule(RuleKind kind, int m);

struct IntegrationResult {
  std::complex<double> value;
  double estimated_error;  ///< |last value - previous value|
  int nodes;               ///< node count of the returned value
};

using ComplexIntegrand = std::function<std::complex<double>(double)>;

/// Integrates f over [lo, hi] with m = 16, 32, ..., 4096 nodes until two
/// successive values differ by less than tol, or by less than the rounding
/// floor 64 eps sum_k w_k |f(x_k)|.
///
/// For gauss_legendre this is int_lo^hi f(x) dx. For gauss_chebyshev_1 the
/// weight is carried by the rule, giving int_lo^hi f(x) dx / sqrt((x - lo)(hi - x)).
///
/// Throws ToleranceNotReached (carrying the 4096-node value) on failure.
IntegrationResult integrate_to_tolerance(const ComplexIntegrand& f, double lo, double hi, RuleKind kind, double tol);

}  // namespace eulerleg
