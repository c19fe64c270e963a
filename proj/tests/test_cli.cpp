#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <gtest/gtest.h>

#include "eulerleg/commands.hpp"
#include "json.hpp"

namespace eulerleg::cli {
namespace {

struct Run {
  int exit_code;
  std::string output;
};

Run run_tool(const std::string& args) {
  const std::string command = std::string(EULERLEG_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TEST(Table, Rows) {
  auto rows = cmd_table(1);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(format_polynomial(rows[0].polynomial), "1");
  EXPECT_EQ(format_polynomial(rows[1].polynomial), "t");
  rows = cmd_table(4);
  EXPECT_EQ(format_polynomial(rows[4].polynomial), "(35t^4 - 30t^2 + 3)/8");
  rows = cmd_table(0);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(render_table(rows, OutputFormat::text), "P_0(t) = 1\n");
  EXPECT_THROW(cmd_table(51), UsageError);
  EXPECT_THROW(cmd_table(-1), UsageError);
}

TEST(Table, JsonAndCsv) {
  const auto rows = cmd_table(3);
  const auto j = nlohmann::json::parse(render_table(rows, OutputFormat::json));
  EXPECT_EQ(j["command"], "table");
  ASSERT_EQ(j["rows"].size(), 4u);
  EXPECT_EQ(j["rows"][3]["polynomial"], "(5t^3 - 3t)/2");
  EXPECT_EQ(j["rows"][3]["coefficients"], nlohmann::json({"0", "-3/2", "0", "5/2"}));
  const std::string csv = render_table(rows, OutputFormat::csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,polynomial,coefficients");
  EXPECT_NE(csv.find("2,(3t^2 - 1)/2,-1/2 0 3/2"), std::string::npos);
}

TEST(Eval, AllMethodsAgree) {
  const auto outcome = cmd_eval(5, "3/2", {}, kDefaultTol);
  EXPECT_TRUE(outcome.pass);
  ASSERT_EQ(outcome.reports.size(), all_methods().size());
  for (const auto& r : outcome.reports) {
    ASSERT_TRUE(r.value) << to_string(r.method);
    EXPECT_NEAR(r.numeric, 33.08203125, 1e-9 * 33.08203125);
    EXPECT_EQ(r.est_error == "exact", is_exact(r.method));
    if (is_exact(r.method)) {
      EXPECT_EQ(*r.value, "33.08203125");
      EXPECT_EQ(*r.exact, Rational(8469, 256));
    }
  }
  EXPECT_LT(outcome.scaled_deviation, 1e-9);
}

TEST(Eval, DegreeZero) {
  const auto outcome = cmd_eval(0, "0.3", {}, kDefaultTol);
  EXPECT_TRUE(outcome.pass);
  for (const auto& r : outcome.reports)
    if (r.value) EXPECT_DOUBLE_EQ(r.numeric, 1.0);
}

TEST(Eval, SkipsInapplicableMethods) {
  const auto outcome = cmd_eval(4, "0.5", {Method::recurrence, Method::e606, Method::laplace_pos}, kDefaultTol);
  EXPECT_TRUE(outcome.pass);
  ASSERT_EQ(outcome.reports.size(), 3u);
  EXPECT_EQ(outcome.reports[1].skipped.value_or(""), "requires t > 1");
  EXPECT_FALSE(outcome.reports[1].value);
  const auto below = cmd_eval(2, "-3", {Method::laplace_neg, Method::recurrence}, kDefaultTol);
  EXPECT_EQ(below.reports[0].skipped.value_or(""), "requires t > -1");
  EXPECT_TRUE(below.pass);
}

TEST(Eval, JsonSchema) {
  const auto outcome = cmd_eval(3, "2", {Method::recurrence, Method::laplace_neg, Method::e606}, kDefaultTol);
  const auto j = nlohmann::json::parse(render_eval(outcome, OutputFormat::json));
  EXPECT_EQ(j["command"], "eval");
  EXPECT_TRUE(j["pass"].get<bool>());
  ASSERT_EQ(j["reports"].size(), 3u);
  for (const auto& r : j["reports"]) {
    for (const char* key : {"method", "n", "t", "value", "est_error"}) EXPECT_TRUE(r.contains(key)) << key;
    EXPECT_EQ(r["n"], 3);
    EXPECT_EQ(r["t"], "2");
    EXPECT_NEAR(std::stod(r["value"].get<std::string>()), 17.0, 1e-9);
  }
  EXPECT_EQ(j["reports"][0]["est_error"], "exact");
  EXPECT_EQ(j["reports"][0]["rational"], "17");
  EXPECT_GE(std::stod(j["reports"][1]["est_error"].get<std::string>()), 0.0);
}

TEST(Eval, CsvColumns) {
  const auto outcome = cmd_eval(4, "0.5", {Method::recurrence, Method::e606}, kDefaultTol);
  const std::string csv = render_eval(outcome, OutputFormat::csv);
  EXPECT_EQ(csv, "method,n,t,value,est_error\nrecurrence,4,0.5,-0.2890625,exact\ne606,4,0.5,skipped: requires t > 1,\n");
}

TEST(Eval, UsageErrors) {
  EXPECT_THROW(cmd_eval(-1, "1/2", {}, kDefaultTol), UsageError);
  EXPECT_THROW(cmd_eval(1, "half", {}, kDefaultTol), UsageError);
  EXPECT_THROW(cmd_eval(1, "1/2", {}, 0.0), UsageError);
  EXPECT_THROW(parse_method("simpson"), UsageError);
  EXPECT_THROW(parse_format("xml"), UsageError);
  EXPECT_THROW(parse_suite("everything"), UsageError);
}

TEST(Gf, Examples) {
  auto g = cmd_gf("2", 3);
  EXPECT_TRUE(g.pass);
  EXPECT_EQ(g.rows[0].series, Rational(1));
  EXPECT_EQ(g.rows[1].series, Rational(2));
  EXPECT_EQ(g.rows[2].series, Rational(11, 2));
  g = cmd_gf("1", 5);
  for (const auto& row : g.rows) EXPECT_EQ(row.series, Rational(1));
  g = cmd_gf("0", 4);
  EXPECT_EQ(g.rows[2].series, Rational(-1, 2));
  EXPECT_EQ(g.rows[3].series, Rational(0));
  EXPECT_TRUE(cmd_gf("-7/5", 200).pass);
  EXPECT_THROW(cmd_gf("2", 201), UsageError);
  EXPECT_THROW(cmd_gf("2", 0), UsageError);
  const auto j = nlohmann::json::parse(render_gf(cmd_gf("2", 3), OutputFormat::json));
  EXPECT_EQ(j["rows"][2]["series"], "11/2");
  EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Ortho, Examples) {
  auto o = cmd_ortho(1, 8, 1e-12);
  EXPECT_TRUE(o.pass);
  EXPECT_NEAR(o.gram(0, 0), 2.0, 1e-14);
  EXPECT_NEAR(o.gram(1, 1), 2.0 / 3.0, 1e-14);
  EXPECT_NEAR(o.gram(0, 1), 0.0, 1e-15);
  o = cmd_ortho(0, 1, 1e-12);
  ASSERT_EQ(o.gram.rows(), 1);
  EXPECT_NEAR(o.gram(0, 0), 2.0, 1e-14);
  o = cmd_ortho(8, 64, 1e-12);
  EXPECT_TRUE(o.pass);
  EXPECT_LT(o.max_diagonal_error, 1e-12);
  EXPECT_LT(o.max_offdiagonal, 1e-12);
  // too few nodes to integrate P_8^2 exactly
  EXPECT_THROW(cmd_ortho(8, 8, 1e-12), UsageError);
  EXPECT_TRUE(cmd_ortho(8, 9, 1e-12).pass);
  EXPECT_FALSE(cmd_ortho(8, 64, 1e-20).pass);
}

TEST(Verify, EachSuitePasses) {
  for (Suite s : {Suite::recurrence, Suite::jacobi, Suite::a_family, Suite::e606, Suite::euler_transform, Suite::section22}) {
    const auto outcome = cmd_verify(s, kDefaultTol);
    EXPECT_TRUE(outcome.pass) << to_string(s);
    EXPECT_FALSE(outcome.checks.empty());
    for (const auto& c : outcome.checks) EXPECT_TRUE(c.pass) << c.suite << " " << c.check << " " << c.tuple << " " << c.residual;
  }
}

TEST(Verify, TightToleranceFails) {
  const auto outcome = cmd_verify(Suite::jacobi, 1e-20);
  EXPECT_FALSE(outcome.pass);
  EXPECT_GT(outcome.failures(), 0u);
}

TEST(Verify, JsonSchema) {
  const auto j = nlohmann::json::parse(render_verify(cmd_verify(Suite::section22, kDefaultTol), OutputFormat::json));
  EXPECT_EQ(j["command"], "verify");
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["failures"], 0);
  for (const auto& c : j["checks"])
    for (const char* key : {"suite", "check", "case", "residual", "threshold", "pass"}) EXPECT_TRUE(c.contains(key));
}

TEST(Tool, ExitCodes) {
  auto r = run_tool("table --max-n 7");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("P_6(t) = (231t^6 - 315t^4 + 105t^2 - 5)/16"), std::string::npos);
  EXPECT_EQ(run_tool("table --max-n 51").exit_code, 2);
  EXPECT_EQ(run_tool("table").exit_code, 2);
  EXPECT_EQ(run_tool("frobnicate").exit_code, 2);
  EXPECT_EQ(run_tool("eval --n 2 --t 1/2 --methods simpson").exit_code, 2);
  EXPECT_EQ(run_tool("eval --n 2 --t 1/2 --format xml").exit_code, 2);
  EXPECT_EQ(run_tool("eval --n 5 --t 3/2").exit_code, 0);
  EXPECT_EQ(run_tool("eval --n 5 --t 3/2 --tol 1e-30").exit_code, 1);
  EXPECT_EQ(run_tool("ortho --max-n 8 --nodes 64 --tol 1e-12").exit_code, 0);
  EXPECT_EQ(run_tool("ortho --max-n 8 --nodes 64 --tol 1e-20").exit_code, 1);
  EXPECT_EQ(run_tool("gf --t 2 --count 3").exit_code, 0);
  EXPECT_EQ(run_tool("verify --suite section22").exit_code, 0);
}

TEST(Tool, MachineReadableOutput) {
  for (const char* sub : {"table --max-n 3", "eval --n 3 --t 0.5", "verify --suite e606", "ortho --max-n 2 --nodes 4",
                          "gf --t 1/3 --count 4"}) {
    const auto r = run_tool(std::string(sub) + " --format json");
    EXPECT_EQ(r.exit_code, 0) << sub;
    EXPECT_TRUE(nlohmann::json::accept(r.output)) << sub;
    const auto c = run_tool(std::string(sub) + " --format csv");
    EXPECT_EQ(c.exit_code, 0) << sub;
    EXPECT_NE(c.output.find(','), std::string::npos) << sub;
  }
}

}  // namespace
}  // namespace eulerleg::cli
