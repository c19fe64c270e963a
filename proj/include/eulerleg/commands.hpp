#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "eulerleg/polynomial.hpp"
#include "eulerleg/rational.hpp"

namespace eulerleg::cli {

/// Bad arguments; the tool maps this to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { text, csv, json };
OutputFormat parse_format(std::string_view name);

enum class Method { recurrence, trinomial, gf_series, primitive_solve, laplace_pos, laplace_neg, e606 };
const char* to_string(Method m);
Method parse_method(std::string_view name);
const std::vector<Method>& all_methods();
bool is_exact(Method m);

/// Default tolerance for cross-method comparisons and verification grids.
inline constexpr double kDefaultTol = 1e-9;

/// |x - reference| <= tol * max(1, |reference|): absolute near the unit
/// interval, relative for the large values P_n takes at |t| > 1.
bool within(double x, double reference, double tol);

/// 17-significant-digit rendering used for every decimal output.
std::string format_double(double v);

// ---------------------------------------------------------------------------
// table

struct TableRow {
  long n;
  RationalPolynomial polynomial;
};

/// P_0 .. P_max_n. UsageError unless 0 <= max_n <= 50.
std::vector<TableRow> cmd_table(long max_n);
std::string render_table(const std::vector<TableRow>& rows, OutputFormat format);

// ---------------------------------------------------------------------------
// eval

struct MethodReport {
  Method method;
  long n;
  std::string t;                        ///< as given on the command line
  std::optional<std::string> value;     ///< 17 significant digits
  std::optional<Rational> exact;        ///< exact methods only
  std::string est_error;                ///< "exact" or a decimal
  std::optional<std::string> skipped;   ///< reason when the method does not apply at t
  std::optional<std::string> error;     ///< failure message when evaluation threw
  double numeric = 0.0;                 ///< value as double, for comparison
};

struct EvalOutcome {
  std::vector<MethodReport> reports;
  double max_pairwise_deviation = 0.0;  ///< absolute, over evaluated methods
  double scaled_deviation = 0.0;        ///< divided by max(1, largest |value|)
  bool pass = true;
};

/// Evaluates P_n(t) with each requested method. t is a rational literal
/// ("p/q" or an exact decimal). pass iff no method failed and the scaled
/// deviation is below tol.
EvalOutcome cmd_eval(long n, const std::string& t, const std::vector<Method>& methods, double tol);
std::string render_eval(const EvalOutcome& outcome, OutputFormat format);

// ---------------------------------------------------------------------------
// verify

enum class Suite { recurrence, jacobi, a_family, e606, euler_transform, section22, all };
Suite parse_suite(std::string_view name);
const char* to_string(Suite s);

struct CheckResult {
  std::string suite;
  std::string check;
  std::string tuple;   ///< grid point, e.g. "n=3 t=0.5"
  double residual;     ///< 0 for exact checks that hold
  double threshold;    ///< 0 for exact checks
  bool pass;
};

struct VerifyOutcome {
  std::vector<CheckResult> checks;
  bool pass = true;
  std::size_t failures() const;
};

VerifyOutcome cmd_verify(Suite suite, double tol);
std::string render_verify(const VerifyOutcome& outcome, OutputFormat format);

// ---------------------------------------------------------------------------
// ortho

struct OrthoOutcome {
  Eigen::MatrixXd gram;  ///< int_{-1}^{1} P_i P_j dx
  double max_offdiagonal = 0.0;
  double max_diagonal_error = 0.0;  ///< vs 2/(2n+1)
  bool pass = true;
};

/// Gram matrix of P_0..P_max_n under an m-node Gauss-Legendre rule.
/// UsageError unless max_n >= 0 and nodes >= max_n + 1.
OrthoOutcome cmd_ortho(long max_n, int nodes, double tol);
std::string render_ortho(const OrthoOutcome& outcome, OutputFormat format);

// ---------------------------------------------------------------------------
// gf

struct GfRow {
  long k;
  Rational series;    ///< coefficient of x^k in (1 - 2tx + x^2)^(-1/2)
  Rational legendre;  ///< P_k(t) by the recurrence
  bool match;
};

struct GfOutcome {
  Rational t;
  std::vector<GfRow> rows;
  bool pass = true;
};

/// UsageError unless 1 <= count <= 200.
GfOutcome cmd_gf(const std::string& t, long count);
std::string render_gf(const GfOutcome& outcome, OutputFormat format);

}  // namespace eulerleg::cli
