#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = umbral::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("umbral_cli_test_" + name);
}

}  // namespace

TEST(CliEval, PeriodicBernoulli) {
  const Result r = run({"eval", "--function", "Btilde", "--order", "3", "--x", "0.25"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("value = 4.68749999"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("error_bound = "), std::string::npos);
}

TEST(CliEval, BaseCase) {
  const Result r = run({"eval", "--function", "B", "--order", "1", "--x", "0.75"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("value = 2.5000000000000000e-01"), std::string::npos) << r.out;
}

TEST(CliEval, ComplexOrderAndJson) {
  const Result r = run({"eval", "--function", "zeta", "--order", "2+0i", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["value"][0], "1.6449340668482264e+00");
  const Result c = run({"eval", "--function", "Li", "--order", "2.5,1", "--x", "0.3"});
  EXPECT_EQ(c.code, 0) << c.err;
}

TEST(CliEval, PoleExitsTwo) {
  const Result r = run({"eval", "--function", "zeta", "--order", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("pole"), std::string::npos) << r.err;
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(CliEval, DomainErrorsExitTwo) {
  EXPECT_EQ(run({"eval", "--function", "B", "--order", "2", "--x", "1.5"}).code, 2);
  EXPECT_EQ(run({"eval", "--function", "B", "--order", "2"}).code, 2);
  EXPECT_EQ(run({"eval", "--function", "Hermite", "--order", "2.5", "--x", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "--function", "what", "--order", "2", "--x", "0.5"}).code, 2);
  EXPECT_EQ(run({"eval", "--function", "B", "--order", "abc", "--x", "0.5"}).code, 2);
  EXPECT_EQ(run({"eval", "--function", "hurwitz", "--order", "2", "--x", "1.5"}).code, 2);
  EXPECT_EQ(run({"eval", "--function", "B", "--order", "2", "--x", "0.5", "--precision", "1e-20"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(CliEval, HelpExitsZero) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(CliVerify, WritesReportAndSummary) {
  const auto path = temp_path("specfun.json");
  const Result r = run({"verify", "--suite", "specfun", "--out", path.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("total"), std::string::npos);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["suite"], "specfun");
  std::filesystem::remove(path);
}

TEST(CliVerify, ReportOnStdoutSummaryOnStderr) {
  const Result r = run({"verify", "--suite", "specfun", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("name,kind,pass", 0), 0u);
  EXPECT_NE(r.err.find("specfun"), std::string::npos);
}

TEST(CliVerify, Deterministic) {
  const Result a = run({"verify", "--suite", "ladder", "--seed", "3"});
  const Result b = run({"verify", "--suite", "ladder", "--seed", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliVerify, IoFailureExitsThree) {
  const Result r = run({"verify", "--suite", "specfun", "--out", "/nonexistent-dir/x/report.json"});
  EXPECT_EQ(r.code, 3);
}

TEST(CliVerify, UnknownSuiteExitsTwo) { EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2); }

TEST(CliConfig, FileValuesAndFlagPrecedence) {
  const auto cfg = temp_path("cfg.txt");
  {
    std::ofstream f(cfg);
    f << "# comment\nfunction = B\norder = 1\nx = 0.25\n";
  }
  const Result a = run({"eval", "--config", cfg.string()});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_NE(a.out.find("value = -2.5000000000000000e-01"), std::string::npos) << a.out;
  const Result b = run({"eval", "--config", cfg.string(), "--x", "0.75"});
  EXPECT_NE(b.out.find("value = 2.5000000000000000e-01"), std::string::npos) << b.out;
  {
    std::ofstream f(cfg);
    f << "colour = blue\n";
  }
  EXPECT_EQ(run({"eval", "--config", cfg.string(), "--function", "zeta", "--order", "2"}).code, 2);
  std::filesystem::remove(cfg);
  EXPECT_EQ(run({"eval", "--config", cfg.string(), "--function", "zeta", "--order", "2"}).code, 3);
}

TEST(CliConfig, PrecisionEnvironment) {
  ::setenv("UMBRAL_PRECISION", "1e-30", 1);
  EXPECT_EQ(run({"eval", "--function", "zeta", "--order", "2"}).code, 2);
  EXPECT_EQ(run({"eval", "--function", "zeta", "--order", "2", "--precision", "1e-12"}).code, 0);
  ::setenv("UMBRAL_PRECISION", "fast", 1);
  EXPECT_EQ(run({"eval", "--function", "zeta", "--order", "2"}).code, 2);
  ::unsetenv("UMBRAL_PRECISION");
}

TEST(CliTable, Orthogonality) {
  const Result r = run({"table", "--kind", "orthogonality", "--max-order", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 10);
  EXPECT_EQ(r.out.rfind("n,m,BB_quadrature,BB_closed_form", 0), 0u);
}

TEST(CliTable, ZetaExtractionJson) {
  const Result r = run({"table", "--kind", "zeta_extraction", "--max-order", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  // (1,2), (1,4), (2,3), (3,4)
  ASSERT_EQ(j.size(), 4u);
  for (const auto& row : j) {
    EXPECT_NEAR(std::stod(row["zeta_estimate"].get<std::string>()),
                std::stod(row["riemann_zeta"].get<std::string>()), 1e-8);
  }
}

TEST(CliTable, JacobiNodes) {
  const Result r = run({"table", "--kind", "jacobi_nodes", "--max-order", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("index,eigenvalue,hermite_root"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
}

TEST(CliTable, RangeViolationExitsTwo) {
  EXPECT_EQ(run({"table", "--max-order", "9"}).code, 2);
  EXPECT_EQ(run({"table", "--max-order", "0"}).code, 2);
  EXPECT_EQ(run({"table", "--kind", "spiral"}).code, 2);
}
