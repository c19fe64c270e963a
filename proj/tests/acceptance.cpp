#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "eulerleg/commands.hpp"
#include "eulerleg/hypergeom.hpp"
#include "eulerleg/integrals.hpp"
#include "eulerleg/recurrence.hpp"
#include "eulerleg/trinomial.hpp"

using namespace eulerleg;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(const char* id, const char* name, double limit_seconds, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= limit_seconds) {
    v.pass = false;
    if (v.detail.empty()) v.detail = "over time limit";
  }
  if (!v.pass) ++failures;
  std::printf("[%s] %s %s (%.2fs, limit %.0fs)%s%s\n", v.pass ? "PASS" : "FAIL", id, name, secs, limit_seconds,
              v.detail.empty() ? "" : ": ", v.detail.c_str());
  std::fflush(stdout);
}

double oracle(long n, double t) { return legendre_eval(n, Rational(t)).to_double(); }

bool near(double x, double ref, double tol) { return std::abs(x - ref) <= tol * std::max(1.0, std::abs(ref)); }

std::string at(long n, double t) { return "n=" + std::to_string(n) + " t=" + cli::format_double(t); }

const std::vector<double> kLaplaceGrid = {-0.9, -0.5, 0.0, 0.5, 0.9, 1.1, 1.5, 2.0, 3.0};

}  // namespace

int main() {
  criterion("AC1", "table reproduction", 1.0, [] {
    Verdict v;
    // numerators over a common denominator, ascending powers
    const std::vector<std::pair<std::vector<long>, long>> expected = {
        {{1}, 1},
        {{0, 1}, 1},
        {{-1, 0, 3}, 2},
        {{0, -3, 0, 5}, 2},
        {{3, 0, -30, 0, 35}, 8},
        {{0, 15, 0, -70, 0, 63}, 8},
        {{-5, 0, 105, 0, -315, 0, 231}, 16},
        {{0, -35, 0, 315, 0, -693, 0, 429}, 16},
    };
    const auto rows = cli::cmd_table(7);
    v.require(rows.size() == 8, "row count");
    for (std::size_t n = 0; n < rows.size() && n < expected.size(); ++n) {
      const auto& [num, den] = expected[n];
      std::vector<Rational> coeffs;
      for (long c : num) coeffs.emplace_back(c, den);
      v.require(rows[n].polynomial == RationalPolynomial(coeffs), "row " + std::to_string(n));
    }
    return v;
  });

  criterion("AC2", "four exact representations coincide", 5.0, [] {
    Verdict v;
    const std::vector<Rational> ts = {Rational(0),     Rational(1),     Rational(-1),    Rational(1, 2), Rational(-1, 3),
                                      Rational(3, 2),  Rational(2),     Rational(-7, 5), Rational(5, 7), Rational(11, 4)};
    for (long n = 0; n <= 15; ++n) {
      const auto p = legendre_poly(n);
      const auto tri = legendre_via_trinomial(n);
      for (const Rational& t : ts) {
        const Rational ref = p(t);
        const auto gf = gf_coefficients(t, Rational(1), n + 1);
        const auto solved = primitive_solve(n, t);
        const std::string where = "n=" + std::to_string(n) + " t=" + t.to_string();
        v.require(tri(t) == ref, "trinomial " + where);
        v.require(gf[n] == ref, "gf " + where);
        v.require(solved.legendre_value == ref, "primitive " + where);
        v.require(primitive_identity_residual(n, t, solved).is_zero(), "primitive identity " + where);
      }
    }
    return v;
  });

  criterion("AC3", "Laplace pair and Jacobi relation", 10.0, [] {
    Verdict v;
    const double tol = 1e-9;
    for (long n = 0; n <= 15; ++n) {
      for (double t : kLaplaceGrid) {
        const double ref = oracle(n, t);
        const auto pos = laplace_positive(n, t, tol);
        const auto neg = laplace_negative(n, t, tol);
        v.require(near(pos.value, ref, tol), "laplace_positive " + at(n, t));
        v.require(near(neg.value, ref, tol), "laplace_negative " + at(n, t));
        v.require(jacobi_relation_residual(n, t, tol).relative() < tol, "jacobi " + at(n, t));
        if (std::abs(t) < 1.0) {
          v.require(pos.imaginary_residue < 1e-10, "imaginary positive " + at(n, t));
          v.require(neg.imaginary_residue < 1e-10, "imaginary negative " + at(n, t));
        }
      }
    }
    return v;
  });

  criterion("AC4", "A-family integrals", 10.0, [] {
    Verdict v;
    const double tol = 1e-9;
    const std::vector<Rational> as = {Rational(3, 10), Rational(-3, 10), Rational(7, 10)};
    for (const Rational& a : as) {
      const double ad = a.to_double();
      for (int k = 0; k <= 4; ++k) {
        for (long n = 0; n <= 5; ++n) {
          const std::string where = "a=" + a.to_string() + " k=" + std::to_string(k) + " n=" + std::to_string(n);
          const double explicit_value = M_PI * a_family_explicit(a, k, n).to_double();
          const double direct = a_family_direct({ad, k, n + 1}, tol).value;
          v.require(std::abs(explicit_value - direct) <= tol * M_PI, "explicit vs direct " + where);
          v.require(a_family_functional_residual(ad, k, n, tol).relative() < tol, "functional " + where);
          if (n >= 2) v.require(a_family_difference_residual(ad, k, n, tol).relative() < tol, "difference " + where);
        }
      }
    }
    return v;
  });

  criterion("AC5", "E606 recurrence and Legendre values", 5.0, [] {
    Verdict v;
    const std::vector<E606Params> triples = {
        {1.0, 1.5, 1.0}, {1.0, 3.0, 2.0}, {0.5, 2.0, 3.0}, {2.0, 3.0, 1.5}, {1.5, -2.0, 1.0}};
    for (const auto& p : triples)
      for (long n = 1; n <= 10; ++n)
        v.require(e606_recurrence_residual(p, n, 1e-12).relative() < 1e-10, "recurrence " + std::to_string(n));
    for (long n = 0; n <= 15; ++n)
      for (double t : {1.1, 1.5, 2.0, 3.0})
        v.require(near(e606_legendre(n, t, 1e-9).value, oracle(n, t), 1e-9), "legendre " + at(n, t));
    return v;
  });

  criterion("AC6", "trinomial relation", 2.0, [] {
    Verdict v;
    const std::vector<long> brute = {1, 1, 3, 7, 19, 51, 141, 393, 1107, 3139};
    // direct expansion of (1 + x + x^2)^n
    for (long n = 0; n < static_cast<long>(brute.size()); ++n) {
      std::vector<long> poly = {1};
      for (long m = 0; m < n; ++m) {
        std::vector<long> next(poly.size() + 2, 0);
        for (std::size_t i = 0; i < poly.size(); ++i)
          for (int d = 0; d < 3; ++d) next[i + d] += poly[i];
        poly = next;
      }
      v.require(poly[n] == brute[n], "brute force " + std::to_string(n));
      v.require(central_coeff({Rational(1), Rational(1), Rational(1)}, n) == Rational(brute[n]),
                "central_coeff " + std::to_string(n));
    }
    std::mt19937 rng(271828);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    std::vector<TrinomialParams> triples = {{Rational(1), Rational(1), Rational(1)}};
    while (triples.size() < 10) triples.push_back({Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                                                    Rational(num(rng), den(rng))});
    for (const auto& p : triples)
      for (long n = 2; n <= 12; ++n) v.require(section22_residual(p, n) == Rational(0), "residual n=" + std::to_string(n));
    return v;
  });

  criterion("AC7", "Euler transformation", 2.0, [] {
    Verdict v;
    const double grid[] = {0.25, 1.25, 2.5};
    for (double a : grid)
      for (double b : grid)
        for (double c : grid)
          for (double x : {0.1, 0.3, 0.5})
            v.require(euler_transform_residual({a, b, c, x}, 1e-13) < 1e-10, "grid point");
    return v;
  });

  criterion("AC8", "orthogonality", 2.0, [] {
    Verdict v;
    const auto o = cli::cmd_ortho(8, 64, 1e-12);
    v.require(o.pass, "ortho pass flag");
    v.require(o.max_offdiagonal < 1e-12, "off-diagonal " + cli::format_double(o.max_offdiagonal));
    for (int i = 0; i <= 8; ++i)
      v.require(std::abs(o.gram(i, i) - 2.0 / (2 * i + 1)) < 1e-12, "diagonal " + std::to_string(i));
    return v;
  });

  criterion("AC9", "verify all", 30.0, [] {
    Verdict v;
    const auto outcome = cli::cmd_verify(cli::Suite::all, cli::kDefaultTol);
    v.require(outcome.pass, std::to_string(outcome.failures()) + " failing checks");
    return v;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
