#include "eulerleg/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "eulerleg/errors.hpp"
#include "eulerleg/integrals.hpp"
#include "eulerleg/quadrature.hpp"
#include "eulerleg/recurrence.hpp"
#include "eulerleg/trinomial.hpp"
#include "json.hpp"

namespace eulerleg::cli {

using nlohmann::ordered_json;

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw UsageError("unknown format '" + std::string(name) + "' (expected text, csv or json)");
}

namespace {

struct MethodName {
  Method method;
  const char* name;
};

constexpr MethodName kMethodNames[] = {
    {Method::recurrence, "recurrence"},   {Method::trinomial, "trinomial"},
    {Method::gf_series, "gf-series"},     {Method::primitive_solve, "primitive-solve"},
    {Method::laplace_pos, "laplace-pos"}, {Method::laplace_neg, "laplace-neg"},
    {Method::e606, "e606"},
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const char* to_string(Method m) {
  for (const auto& [method, name] : kMethodNames)
    if (method == m) return name;
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (const auto& [method, known] : kMethodNames)
    if (name == known) return method;
  throw UsageError("unknown method '" + std::string(name) + "'");
}

const std::vector<Method>& all_methods() {
  static const std::vector<Method> methods = [] {
    std::vector<Method> v;
    for (const auto& entry : kMethodNames) v.push_back(entry.method);
    return v;
  }();
  return methods;
}

bool is_exact(Method m) {
  return m == Method::recurrence || m == Method::trinomial || m == Method::gf_series || m == Method::primitive_solve;
}

bool within(double x, double reference, double tol) {
  return std::abs(x - reference) <= tol * std::max(1.0, std::abs(reference));
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------

std::vector<TableRow> cmd_table(long max_n) {
  if (max_n < 0 || max_n > 50) throw UsageError("--max-n must be in [0, 50]");
  std::vector<TableRow> rows;
  for (long n = 0; n <= max_n; ++n) rows.push_back({n, legendre_poly(n)});
  return rows;
}

std::string render_table(const std::vector<TableRow>& rows, OutputFormat format) {
  std::ostringstream out;
  const auto coefficient_list = [](const RationalPolynomial& p) {
    std::vector<std::string> v;
    for (const auto& c : p.coefficients()) v.push_back(c.to_string());
    return v;
  };
  switch (format) {
    case OutputFormat::text:
      for (const auto& row : rows) out << "P_" << row.n << "(t) = " << format_polynomial(row.polynomial) << '\n';
      break;
    case OutputFormat::csv:
      out << "n,polynomial,coefficients\n";
      for (const auto& row : rows) {
        std::string joined;
        for (const auto& c : coefficient_list(row.polynomial)) joined += (joined.empty() ? "" : " ") + c;
        out << row.n << ',' << csv_field(format_polynomial(row.polynomial)) << ',' << joined << '\n';
      }
      break;
    case OutputFormat::json: {
      ordered_json j;
      j["command"] = "table";
      j["rows"] = ordered_json::array();
      for (const auto& row : rows)
        j["rows"].push_back(
            {{"n", row.n}, {"polynomial", format_polynomial(row.polynomial)}, {"coefficients", coefficient_list(row.polynomial)}});
      out << j.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

Rational parse_t(const std::string& t) {
  try {
    return Rational::parse(t);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--t: ") + e.what());
  }
}

MethodReport evaluate(Method method, long n, const std::string& t_text, const Rational& t, double tol) {
  MethodReport report{method, n, t_text, std::nullopt, std::nullopt, "exact", std::nullopt, std::nullopt, 0.0};
  const double td = t.to_double();
  const auto set_exact = [&](const Rational& v) {
    report.exact = v;
    report.value = v.to_decimal(17);
    report.numeric = v.to_double();
  };
  const auto set_numeric = [&](const NumericValue& v) {
    report.value = format_double(v.value);
    report.est_error = format_double(v.estimated_error);
    report.numeric = v.value;
  };
  try {
    switch (method) {
      case Method::recurrence:
        set_exact(legendre_eval(n, t));
        break;
      case Method::trinomial:
        set_exact(legendre_via_trinomial(n)(t));
        break;
      case Method::gf_series:
        set_exact(gf_coefficients(t, Rational(1), n + 1).back());
        break;
      case Method::primitive_solve:
        set_exact(primitive_solve(n, t).legendre_value);
        break;
      case Method::laplace_pos:
        set_numeric(laplace_positive(n, td, tol));
        break;
      case Method::laplace_neg:
        if (td < -1.0) {
          report.skipped = "requires t > -1";
        } else {
          set_numeric(laplace_negative(n, td, tol));
        }
        break;
      case Method::e606:
        if (!(t > Rational(1))) {
          report.skipped = "requires t > 1";
        } else {
          set_numeric(e606_legendre(n, td, tol));
        }
        break;
    }
  } catch (const std::exception& e) {
    report.value.reset();
    report.exact.reset();
    report.error = e.what();
  }
  if (report.skipped || report.error) report.est_error.clear();
  return report;
}

}  // namespace

EvalOutcome cmd_eval(long n, const std::string& t, const std::vector<Method>& methods, double tol) {
  if (n < 0) throw UsageError("--n must be nonnegative");
  if (!(tol > 0.0)) throw UsageError("--tol must be positive");
  const Rational exact_t = parse_t(t);
  EvalOutcome outcome;
  for (Method m : methods.empty() ? all_methods() : methods) outcome.reports.push_back(evaluate(m, n, t, exact_t, tol));

  double largest = 0.0;
  for (std::size_t i = 0; i < outcome.reports.size(); ++i) {
    const auto& a = outcome.reports[i];
    if (a.error) outcome.pass = false;
    if (!a.value) continue;
    largest = std::max(largest, std::abs(a.numeric));
    for (std::size_t j = i + 1; j < outcome.reports.size(); ++j) {
      const auto& b = outcome.reports[j];
      if (!b.value) continue;
      outcome.max_pairwise_deviation = std::max(outcome.max_pairwise_deviation, std::abs(a.numeric - b.numeric));
    }
  }
  outcome.scaled_deviation = outcome.max_pairwise_deviation / std::max(1.0, largest);
  if (!(outcome.scaled_deviation < tol)) outcome.pass = false;
  return outcome;
}

std::string render_eval(const EvalOutcome& outcome, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::text:
      for (const auto& r : outcome.reports) {
        char line[256];
        std::string value = r.value ? *r.value : (r.skipped ? "skipped: " + *r.skipped : "error: " + r.error.value_or(""));
        std::snprintf(line, sizeof line, "%-16s n=%-4ld t=%-12s %s", to_string(r.method), r.n, r.t.c_str(), value.c_str());
        out << line;
        if (r.value) out << "  est_error=" << r.est_error;
        out << '\n';
      }
      out << "max pairwise deviation: " << format_double(outcome.max_pairwise_deviation) << " ("
          << (outcome.pass ? "pass" : "FAIL") << ")\n";
      break;
    case OutputFormat::csv:
      out << "method,n,t,value,est_error\n";
      for (const auto& r : outcome.reports) {
        const std::string value =
            r.value ? *r.value : (r.skipped ? "skipped: " + *r.skipped : "error: " + r.error.value_or(""));
        out << to_string(r.method) << ',' << r.n << ',' << csv_field(r.t) << ',' << csv_field(value) << ','
            << r.est_error << '\n';
      }
      break;
    case OutputFormat::json: {
      ordered_json j;
      j["command"] = "eval";
      j["reports"] = ordered_json::array();
      for (const auto& r : outcome.reports) {
        ordered_json item{{"method", to_string(r.method)}, {"n", r.n}, {"t", r.t}};
        item["value"] = r.value ? ordered_json(*r.value) : ordered_json(nullptr);
        item["est_error"] = r.value ? ordered_json(r.est_error) : ordered_json(nullptr);
        if (r.exact) item["rational"] = r.exact->to_string();
        if (r.skipped) item["skipped"] = *r.skipped;
        if (r.error) item["error"] = *r.error;
        j["reports"].push_back(std::move(item));
      }
      j["max_pairwise_deviation"] = format_double(outcome.max_pairwise_deviation);
      j["pass"] = outcome.pass;
      out << j.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------

OrthoOutcome cmd_ortho(long max_n, int nodes, double tol) {
  if (max_n < 0) throw UsageError("--max-n must be nonnegative");
  if (nodes < max_n + 1) throw UsageError("--nodes must be at least max-n + 1");
  if (!(tol > 0.0)) throw UsageError("--tol must be positive");
  const auto rule = cached_rule(RuleKind::gauss_legendre, nodes);
  const Eigen::Index size = max_n + 1;
  Eigen::MatrixXd values(rule->size(), size);
  for (Eigen::Index k = 0; k < rule->size(); ++k)
    for (Eigen::Index n = 0; n < size; ++n) values(k, n) = legendre_value<double>(n, rule->nodes[k]);

  OrthoOutcome outcome;
  outcome.gram = values.transpose() * rule->weights.asDiagonal() * values;
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      if (i == j) {
        const double expected = 2.0 / (2.0 * static_cast<double>(i) + 1.0);
        outcome.max_diagonal_error = std::max(outcome.max_diagonal_error, std::abs(outcome.gram(i, i) - expected));
      } else {
        outcome.max_offdiagonal = std::max(outcome.max_offdiagonal, std::abs(outcome.gram(i, j)));
      }
    }
  }
  outcome.pass = outcome.max_offdiagonal < tol && outcome.max_diagonal_error < tol;
  return outcome;
}

std::string render_ortho(const OrthoOutcome& outcome, OutputFormat format) {
  std::ostringstream out;
  const Eigen::Index size = outcome.gram.rows();
  switch (format) {
    case OutputFormat::text:
      for (Eigen::Index i = 0; i < size; ++i) {
        for (Eigen::Index j = 0; j < size; ++j) out << (j ? " " : "") << format_double(outcome.gram(i, j));
        out << '\n';
      }
      out << "max off-diagonal: " << format_double(outcome.max_offdiagonal)
          << "\nmax diagonal error: " << format_double(outcome.max_diagonal_error) << " ("
          << (outcome.pass ? "pass" : "FAIL") << ")\n";
      break;
    case OutputFormat::csv:
      out << "i,j,value,expected\n";
      for (Eigen::Index i = 0; i < size; ++i)
        for (Eigen::Index j = 0; j < size; ++j)
          out << i << ',' << j << ',' << format_double(outcome.gram(i, j)) << ','
              << format_double(i == j ? 2.0 / (2.0 * static_cast<double>(i) + 1.0) : 0.0) << '\n';
      break;
    case OutputFormat::json: {
      ordered_json j;
      j["command"] = "ortho";
      j["gram"] = ordered_json::array();
      for (Eigen::Index i = 0; i < size; ++i) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index k = 0; k < size; ++k) row.push_back(format_double(outcome.gram(i, k)));
        j["gram"].push_back(std::move(row));
      }
      j["max_offdiagonal"] = format_double(outcome.max_offdiagonal);
      j["max_diagonal_error"] = format_double(outcome.max_diagonal_error);
      j["pass"] = outcome.pass;
      out << j.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------

GfOutcome cmd_gf(const std::string& t, long count) {
  if (count < 1 || count > 200) throw UsageError("--count must be in [1, 200]");
  GfOutcome outcome{parse_t(t), {}, true};
  const auto series = gf_coefficients(outcome.t, Rational(1), count);
  for (long k = 0; k < count; ++k) {
    Rational legendre = legendre_eval(k, outcome.t);
    const bool match = legendre == series[static_cast<std::size_t>(k)];
    outcome.pass = outcome.pass && match;
    outcome.rows.push_back({k, series[static_cast<std::size_t>(k)], std::move(legendre), match});
  }
  return outcome;
}

std::string render_gf(const GfOutcome& outcome, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::text:
      for (const auto& row : outcome.rows)
        out << "k=" << row.k << "  series=" << row.series << "  P_k(t)=" << row.legendre
            << (row.match ? "" : "  MISMATCH") << '\n';
      out << (outcome.pass ? "all coefficients match\n" : "mismatch found\n");
      break;
    case OutputFormat::csv:
      out << "k,series,legendre,match\n";
      for (const auto& row : outcome.rows)
        out << row.k << ',' << row.series << ',' << row.legendre << ',' << (row.match ? "true" : "false") << '\n';
      break;
    case OutputFormat::json: {
      ordered_json j;
      j["command"] = "gf";
      j["t"] = outcome.t.to_string();
      j["rows"] = ordered_json::array();
      for (const auto& row : outcome.rows)
        j["rows"].push_back({{"k", row.k},
                             {"series", row.series.to_string()},
                             {"legendre", row.legendre.to_string()},
                             {"match", row.match}});
      j["pass"] = outcome.pass;
      out << j.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace eulerleg::cli
