// eulerleg: evaluate and cross-check Legendre polynomial representations.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eulerleg/commands.hpp"

namespace cli = eulerleg::cli;

namespace {

std::vector<cli::Method> split_methods(const std::string& list) {
  std::vector<cli::Method> out;
  if (list.empty() || list == "all") return cli::all_methods();
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = list.find(',', start);
    const std::string item = list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) out.push_back(cli::parse_method(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendre polynomials through every classical representation, cross-verified"};
  app.require_subcommand(1);

  std::string format = "text";
  long n = 0;
  long max_n = 0;
  int nodes = 0;
  long count = 0;
  double tol = cli::kDefaultTol;
  std::string t;
  std::string methods = "all";
  std::string suite = "all";

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  };

  auto* table = app.add_subcommand("table", "Print P_0 .. P_max-n with exact rational coefficients");
  table->add_option("--max-n", max_n, "Largest degree (0..50)")->required();
  add_format(table);

  auto* eval = app.add_subcommand("eval", "Evaluate P_n(t) by several methods and compare");
  eval->add_option("--n", n, "Degree")->required();
  eval->add_option("--t", t, "Point, as p/q or an exact decimal")->required();
  eval->add_option("--methods", methods,
                   "Comma list of recurrence,trinomial,gf-series,primitive-solve,laplace-pos,laplace-neg,e606 or 'all'");
  eval->add_option("--tol", tol, "Cross-method tolerance");
  add_format(eval);

  auto* verify = app.add_subcommand("verify", "Run identity-verification grids");
  verify->add_option("--suite", suite, "recurrence, jacobi, a-family, e606, euler-transform, section22 or all");
  verify->add_option("--tol", tol, "Numeric tolerance");
  add_format(verify);

  auto* ortho = app.add_subcommand("ortho", "Gram matrix of P_0 .. P_max-n by Gauss-Legendre quadrature");
  ortho->add_option("--max-n", max_n, "Largest degree")->required();
  ortho->add_option("--nodes", nodes, "Quadrature nodes (>= max-n + 1)")->required();
  ortho->add_option("--tol", tol, "Tolerance on off-diagonals and diagonal error");
  add_format(ortho);

  auto* gf = app.add_subcommand("gf", "Generating-function coefficients at rational t vs the recurrence");
  gf->add_option("--t", t, "Point, as p/q or an exact decimal")->required();
  gf->add_option("--count", count, "Number of coefficients (1..200)")->required();
  add_format(gf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const cli::OutputFormat fmt = cli::parse_format(format);
    if (table->parsed()) {
      std::cout << cli::render_table(cli::cmd_table(max_n), fmt);
      return 0;
    }
    if (eval->parsed()) {
      const auto outcome = cli::cmd_eval(n, t, split_methods(methods), tol);
      std::cout << cli::render_eval(outcome, fmt);
      return outcome.pass ? 0 : 1;
    }
    if (verify->parsed()) {
      const auto outcome = cli::cmd_verify(cli::parse_suite(suite), tol);
      std::cout << cli::render_verify(outcome, fmt);
      if (!outcome.pass)
        for (const auto& c : outcome.checks)
          if (!c.pass) std::cerr << "failed: " << c.suite << ' ' << c.check << ' ' << c.tuple << '\n';
      return outcome.pass ? 0 : 1;
    }
    if (ortho->parsed()) {
      const auto outcome = cli::cmd_ortho(max_n, nodes, tol);
      std::cout << cli::render_ortho(outcome, fmt);
      return outcome.pass ? 0 : 1;
    }
    if (gf->parsed()) {
      const auto outcome = cli::cmd_gf(t, count);
      std::cout << cli::render_gf(outcome, fmt);
      return outcome.pass ? 0 : 1;
    }
  } catch (const cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
