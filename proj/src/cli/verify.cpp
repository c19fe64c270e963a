#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "eulerleg/commands.hpp"
#include "eulerleg/hypergeom.hpp"
#include "eulerleg/integrals.hpp"
#include "eulerleg/recurrence.hpp"
#include "eulerleg/trinomial.hpp"
#include "json.hpp"

namespace eulerleg::cli {

namespace {

constexpr double kPi = std::numbers::pi;

struct SuiteName {
  Suite suite;
  const char* name;
};

constexpr SuiteName kSuiteNames[] = {
    {Suite::recurrence, "recurrence"}, {Suite::jacobi, "jacobi"},
    {Suite::a_family, "a-family"},     {Suite::e606, "e606"},
    {Suite::euler_transform, "euler-transform"}, {Suite::section22, "section22"},
    {Suite::all, "all"},
};

std::string fmt(const char* pattern, auto... args) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

class Recorder {
 public:
  Recorder(VerifyOutcome& outcome, const char* suite) : outcome_(outcome), suite_(suite) {}

  void exact(const std::string& check, const std::string& tuple, const Rational& difference) {
    const bool ok = difference.is_zero();
    outcome_.checks.push_back({suite_, check, tuple, std::abs(difference.to_double()), 0.0, ok});
    outcome_.pass = outcome_.pass && ok;
  }
  void exact(const std::string& check, const std::string& tuple, bool equal) {
    outcome_.checks.push_back({suite_, check, tuple, equal ? 0.0 : 1.0, 0.0, equal});
    outcome_.pass = outcome_.pass && equal;
  }
  void numeric(const std::string& check, const std::string& tuple, double residual, double threshold) {
    const bool ok = residual < threshold;
    outcome_.checks.push_back({suite_, check, tuple, residual, threshold, ok});
    outcome_.pass = outcome_.pass && ok;
  }
  /// Runs body; an exception becomes a failed check.
  template <typename F>
  void guarded(const std::string& check, const std::string& tuple, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      outcome_.checks.push_back({suite_, check, tuple + " error: " + e.what(), INFINITY, 0.0, false});
      outcome_.pass = false;
    }
  }

 private:
  VerifyOutcome& outcome_;
  std::string suite_;
};

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  return Rational(num(rng), den(rng));
}

double scaled_error(double x, double reference) { return std::abs(x - reference) / std::max(1.0, std::abs(reference)); }

// Rational sample points for exact-path grids.
const std::array<Rational, 10>& exact_t_samples() {
  static const std::array<Rational, 10> samples{Rational(-3, 2), Rational(-1),   Rational(-1, 3), Rational(0),
                                                 Rational(1, 7),   Rational(1, 2), Rational(1),     Rational(3, 2),
                                                 Rational(2),      Rational(7, 3)};
  return samples;
}

Rational brute_force_central(const TrinomialParams& p, long n) {
  const RationalPolynomial trinomial({p.a, p.b, p.c}, "x");
  RationalPolynomial power{Rational(1)};
  for (long i = 0; i < n; ++i) power = power * trinomial;
  return power[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------------------

void run_recurrence(VerifyOutcome& outcome, double) {
  Recorder rec(outcome, "recurrence");
  const RationalPolynomial t{Rational(0), Rational(1)};
  std::vector<RationalPolynomial> p;
  for (long n = 0; n <= 31; ++n) p.push_back(legendre_poly(n));

  for (long n = 1; n <= 30; ++n) {
    const auto residual = Rational(n + 1) * p[n + 1] - Rational(2 * n + 1) * (t * p[n]) + Rational(n) * p[n - 1];
    rec.exact("three-term-residual", fmt("n=%ld", n), residual.is_zero());
  }
  for (long n = 0; n <= 30; ++n) {
    const RationalPolynomial reflected = p[n] * Rational(n % 2 == 0 ? 1 : -1);
    std::vector<Rational> flipped = p[n].coefficients();
    for (std::size_t i = 1; i < flipped.size(); i += 2) flipped[i] = -flipped[i];
    rec.exact("parity", fmt("n=%ld", n), RationalPolynomial(flipped) == reflected);
    rec.exact("endpoint+1", fmt("n=%ld", n), p[n](Rational(1)) - Rational(1));
    rec.exact("endpoint-1", fmt("n=%ld", n), p[n](Rational(-1)) - Rational(n % 2 == 0 ? 1 : -1));
  }

  std::mt19937 rng(20240611);
  for (int sample = 0; sample < 20; ++sample) {
    const Rational tv = random_rational(rng);
    for (long n = 0; n <= 20; ++n) {
      const auto solved = primitive_solve(n, tv);
      const std::string tuple = fmt("n=%ld t=%s", n, tv.to_string().c_str());
      rec.exact("primitive-solve", tuple, solved.legendre_value - legendre_eval(n, tv));
      rec.exact("primitive-identity", tuple, primitive_identity_residual(n, tv, solved).is_zero());
    }
  }

  for (long n = 0; n <= 15; ++n) {
    const RationalPolynomial via_trinomial = legendre_via_trinomial(n);
    for (const Rational& tv : exact_t_samples()) {
      const Rational reference = p[n](tv);
      const std::string tuple = fmt("n=%ld t=%s", n, tv.to_string().c_str());
      rec.exact("trinomial-agrees", tuple, via_trinomial(tv) - reference);
      rec.exact("gf-series-agrees", tuple, gf_coefficients(tv, Rational(1), n + 1).back() - reference);
      rec.exact("primitive-agrees", tuple, primitive_solve(n, tv).legendre_value - reference);
      rec.exact("eval-agrees", tuple, legendre_eval(n, tv) - reference);
    }
  }

  // Derivative against a central difference of the double recurrence.
  for (int i = 0; i < 20; ++i) {
    const double x = -0.95 + 0.1 * i;
    const long n = 1 + i;
    const double h = 1e-6;
    const double fd = (legendre_value<double>(n, x + h) - legendre_value<double>(n, x - h)) / (2 * h);
    const double d = legendre_eval_with_derivative(n, x).derivative;
    rec.numeric("derivative-fd", fmt("n=%ld x=%.2f", n, x), std::abs(d - fd) / std::max(1.0, std::abs(fd)), 1e-6);
  }
}

void run_jacobi(VerifyOutcome& outcome, double tol) {
  Recorder rec(outcome, "jacobi");
  static const char* kT[] = {"-0.9", "-0.5", "0", "0.5", "0.9", "1.1", "1.5", "2", "3"};
  for (const char* ts : kT) {
    const Rational exact_t = Rational::parse(ts);
    const double t = exact_t.to_double();
    for (long n = 0; n <= 15; ++n) {
      const std::string tuple = fmt("n=%ld t=%s", n, ts);
      const double reference = legendre_eval(n, exact_t).to_double();
      rec.guarded("laplace", tuple, [&] {
        const NumericValue pos = laplace_positive(n, t, tol);
        const NumericValue neg = laplace_negative(n, t, tol);
        rec.numeric("laplace-pos", tuple, scaled_error(pos.value, reference), tol);
        rec.numeric("laplace-neg", tuple, scaled_error(neg.value, reference), tol);
        const IdentityResidual jacobi = jacobi_relation_residual(n, t, tol);
        rec.numeric("jacobi-relation", tuple, jacobi.relative(), tol);
        if (std::abs(t) < 1.0) {
          rec.numeric("imag-residue-pos", tuple, pos.imaginary_residue, tol / 10);
          rec.numeric("imag-residue-neg", tuple, neg.imaginary_residue, tol / 10);
        }
      });
    }
  }
}

void run_a_family(VerifyOutcome& outcome, double tol) {
  Recorder rec(outcome, "a-family");
  static const char* kA[] = {"0.3", "-0.3", "0.7"};
  for (const char* as : kA) {
    const Rational exact_a = Rational::parse(as);
    const double a = exact_a.to_double();
    for (int k = 0; k <= 4; ++k) {
      for (long n = 0; n <= 5; ++n) {
        const std::string tuple = fmt("a=%s k=%d n=%ld", as, k, n);
        rec.guarded("a-family", tuple, [&] {
          const double explicit_value = kPi * a_family_explicit(exact_a, k, n).to_double();
          const double direct = a_family_direct({a, k, n + 1}, tol).value;
          rec.numeric("explicit-vs-direct", tuple, std::abs(explicit_value - direct), tol * kPi);
          rec.numeric("functional-equation", tuple, a_family_functional_residual(a, k, n, tol).relative(), tol);
          if (n >= 2) rec.numeric("difference-equation", tuple, a_family_difference_residual(a, k, n, tol).relative(), tol);
        });
      }
    }
  }
}

void run_e606(VerifyOutcome& outcome, double tol) {
  Recorder rec(outcome, "e606");
  static const E606Params kParams[] = {{1.0, 1.5, 1.0}, {1.0, 3.0, 2.0}, {0.5, 2.0, 3.0}, {2.0, 3.0, 1.5}, {1.5, -2.0, 1.0}};
  for (const auto& p : kParams) {
    for (long n = 1; n <= 10; ++n) {
      const std::string tuple = fmt("a=%g b=%g c=%g n=%ld", p.a, p.b, p.c, n);
      rec.guarded("recurrence", tuple,
                  [&] { rec.numeric("recurrence", tuple, e606_recurrence_residual(p, n, tol).relative(), tol / 10); });
    }
  }
  static const char* kT[] = {"1.1", "1.5", "2", "3"};
  for (const char* ts : kT) {
    const Rational exact_t = Rational::parse(ts);
    for (long n = 0; n <= 15; ++n) {
      const std::string tuple = fmt("n=%ld t=%s", n, ts);
      rec.guarded("legendre", tuple, [&] {
        const double reference = legendre_eval(n, exact_t).to_double();
        rec.numeric("legendre", tuple, scaled_error(e606_legendre(n, exact_t.to_double(), tol).value, reference), tol);
      });
    }
  }
  // x -> lambda y maps G(n; a, b, c) to lambda^(n+1) G(n; a, lambda b, lambda^2 c).
  const E606Params base{1.0, 3.0, 2.0};
  const double lambda = 2.0;
  const E606Params scaled{base.a, lambda * base.b, lambda * lambda * base.c};
  for (long n = 0; n <= 10; ++n) {
    const std::string tuple = fmt("lambda=2 n=%ld", n);
    rec.guarded("scale-covariance", tuple, [&] {
      const double left = e606_G_mod(base, n, tol).value;
      const double right = std::pow(lambda, static_cast<double>(n + 1)) * e606_G_mod(scaled, n, tol).value;
      rec.numeric("scale-covariance", tuple, std::abs(left - right) / std::max(1.0, std::abs(left)), tol / 10);
    });
  }
}

void run_euler_transform(VerifyOutcome& outcome, double tol) {
  Recorder rec(outcome, "euler-transform");
  static const double kParam[] = {0.25, 1.25, 2.5};
  static const double kX[] = {0.1, 0.3, 0.5};
  for (double a : kParam)
    for (double b : kParam)
      for (double c : kParam)
        for (double x : kX) {
          const std::string tuple = fmt("a=%g b=%g c=%g x=%g", a, b, c, x);
          rec.guarded("transform", tuple, [&] {
            rec.numeric("transform", tuple, euler_transform_residual({a, b, c, x}, tol * 1e-3), tol / 10);
            rec.exact("symmetry", tuple, hyp2f1({a, b, c, x}, tol * 1e-3) == hyp2f1({b, a, c, x}, tol * 1e-3));
          });
        }
}

void run_section22(VerifyOutcome& outcome, double) {
  Recorder rec(outcome, "section22");
  const TrinomialParams ones{Rational(1), Rational(1), Rational(1)};
  static const long kCentral[] = {1, 1, 3, 7, 19, 51, 141, 393, 1107, 3139};
  for (long n = 0; n < 10; ++n) {
    const std::string tuple = fmt("a=b=c=1 n=%ld", n);
    rec.exact("brute-force-sequence", tuple, brute_force_central(ones, n) - Rational(kCentral[n]));
    rec.exact("central-coeff", tuple, central_coeff(ones, n) - Rational(kCentral[n]));
  }

  std::vector<TrinomialParams> triples{ones};
  const Rational t3(3);
  triples.push_back({(t3 - Rational(1)) / Rational(2), t3, (t3 + Rational(1)) / Rational(2)});
  std::mt19937 rng(314159);
  for (int i = 0; i < 10; ++i) triples.push_back({random_rational(rng), random_rational(rng), random_rational(rng)});

  for (const auto& p : triples) {
    const std::string label =
        fmt("a=%s b=%s c=%s", p.a.to_string().c_str(), p.b.to_string().c_str(), p.c.to_string().c_str());
    for (long n = 2; n <= 12; ++n) rec.exact("residual", label + fmt(" n=%ld", n), section22_residual(p, n));
    for (long n = 0; n <= 12; ++n)
      rec.exact("closed-sum-vs-expansion", label + fmt(" n=%ld", n), central_coeff(p, n) - brute_force_central(p, n));
  }
  for (std::size_t i = 2; i < 7; ++i) {
    const auto& p = triples[i];
    const auto series = gf_coefficients(p.b, p.discriminant(), 12);
    for (long k = 0; k < 12; ++k)
      rec.exact("gf-vs-central", fmt("triple=%zu k=%ld", i - 2, k), series[static_cast<std::size_t>(k)] - central_coeff(p, k));
  }
  for (long n = 0; n <= 15; ++n)
    rec.exact("trinomial-definition", fmt("n=%ld", n), legendre_via_trinomial(n) == legendre_poly(n));
}

}  // namespace

Suite parse_suite(std::string_view name) {
  for (const auto& [suite, known] : kSuiteNames)
    if (name == known) return suite;
  throw UsageError("unknown suite '" + std::string(name) + "'");
}

const char* to_string(Suite s) {
  for (const auto& [suite, name] : kSuiteNames)
    if (suite == s) return name;
  return "unknown";
}

std::size_t VerifyOutcome::failures() const {
  std::size_t count = 0;
  for (const auto& c : checks) count += c.pass ? 0 : 1;
  return count;
}

VerifyOutcome cmd_verify(Suite suite, double tol) {
  if (!(tol > 0.0)) throw UsageError("--tol must be positive");
  VerifyOutcome outcome;
  const auto want = [&](Suite s) { return suite == Suite::all || suite == s; };
  if (want(Suite::recurrence)) run_recurrence(outcome, tol);
  if (want(Suite::jacobi)) run_jacobi(outcome, tol);
  if (want(Suite::a_family)) run_a_family(outcome, tol);
  if (want(Suite::e606)) run_e606(outcome, tol);
  if (want(Suite::euler_transform)) run_euler_transform(outcome, tol);
  if (want(Suite::section22)) run_section22(outcome, tol);
  return outcome;
}

std::string render_verify(const VerifyOutcome& outcome, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::text: {
      for (const auto& c : outcome.checks)
        out << (c.pass ? "[pass] " : "[FAIL] ") << c.suite << ' ' << c.check << ' ' << c.tuple
            << " residual=" << format_double(c.residual)
            << (c.threshold > 0.0 ? " threshold=" + format_double(c.threshold) : std::string(" exact")) << '\n';
      out << outcome.checks.size() << " checks, " << outcome.failures() << " failed\n";
      break;
    }
    case OutputFormat::csv:
      out << "suite,check,case,residual,threshold,pass\n";
      for (const auto& c : outcome.checks)
        out << c.suite << ',' << c.check << ",\"" << c.tuple << "\"," << format_double(c.residual) << ','
            << (c.threshold > 0.0 ? format_double(c.threshold) : std::string("exact")) << ',' << (c.pass ? "true" : "false")
            << '\n';
      break;
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["command"] = "verify";
      j["checks"] = nlohmann::ordered_json::array();
      for (const auto& c : outcome.checks)
        j["checks"].push_back({{"suite", c.suite},
                               {"check", c.check},
                               {"case", c.tuple},
                               {"residual", format_double(c.residual)},
                               {"threshold", c.threshold > 0.0 ? format_double(c.threshold) : std::string("exact")},
                               {"pass", c.pass}});
      j["failures"] = outcome.failures();
      j["pass"] = outcome.pass;
      out << j.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace eulerleg::cli
