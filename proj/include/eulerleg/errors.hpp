#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace eulerleg {

/// An iterative numeric procedure stopped at its cap without meeting the
/// requested tolerance. Carries the best value found.
class ToleranceNotReached : public std::runtime_error {
 public:
  ToleranceNotReached(const std::string& what, std::complex<double> best_value, double estimated_error)
      : std::runtime_error(what), best_value_(best_value), estimated_error_(estimated_error) {}

  std::complex<double> best_value() const { return best_value_; }
  double estimated_error() const { return estimated_error_; }

 private:
  std::complex<double> best_value_;
  double estimated_error_;
};

/// A result violated a mathematical consistency requirement, e.g. a real
/// quantity came back with a non-negligible imaginary part.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eulerleg
