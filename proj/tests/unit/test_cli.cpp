#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "hyperpoly/certificate.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hyperpoly::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, EvalExample) {
  const CliResult r = run({"eval", "--hf", "T", "--poly", "1T^3+(-2)", "--at", "-1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[-inf,-2]\n");
}

TEST(Cli, MemberTraceAndStructuredOutput) {
  const std::vector<std::string> args = {"member", "--hf", "V", "--poly", "T^3+2T^2+11T+6", "--expr",
                                         "(T+1)*((T+2)*(T+3))"};
  const CliResult human = run(args);
  EXPECT_EQ(human.code, 0);
  EXPECT_NE(human.out.find("d1 ∈ {5}"), std::string::npos);

  auto structured_args = args;
  structured_args.insert(structured_args.end(), {"--format", "structured"});
  const CliResult a = run(structured_args), b = run(structured_args);
  EXPECT_EQ(a.out, b.out);
  const hyperpoly::Certificate c = hyperpoly::certificate_from_json(a.out);
  EXPECT_EQ(c.verdict, hyperpoly::Verdict::No);
  EXPECT_EQ(hyperpoly::to_json(c) + "\n", a.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"eval", "--hf", "T", "--poly", "T^^", "--at", "0"}).code, 2);
  EXPECT_EQ(run({"eval", "--hf", "Q", "--poly", "T", "--at", "0"}).code, 2);
  EXPECT_EQ(run({"member", "--hf", "S", "--poly", "T+1", "--expr", "(T+ph(1/2))"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"reducible", "--hf", "T", "--poly", "0T^5+1"}).code, 3);
  EXPECT_EQ(run({"assoc-check", "--hf", "K", "-p", "T+1", "-q", "T^2+1", "-r", "T+1"}).code, 1);
  EXPECT_EQ(run({"ddist", "--hf", "W"}).code, 1);
  EXPECT_EQ(run({"axioms", "--hf", "S"}).code, 0);
}

TEST(Cli, Subcommands) {
  EXPECT_EQ(run({"prod", "--hf", "V", "-p", "T+2", "-q", "T^2+4T+3"}).out, "{1}T^3 + [2,6]T^2 + [5,11]T + {6}\n");
  EXPECT_EQ(run({"mult", "--hf", "S", "--poly", "T^3-T", "--at", "0"}).out, "1\n");
  EXPECT_EQ(run({"mult-set", "--hf", "V", "--poly", "T^2+3T+1", "--region", "[1,inf)"}).out, "1\n");
  EXPECT_EQ(run({"mult-set", "--hf", "S", "--poly", "T^3-T", "--region", "{0,1}"}).out, "2\n");
  EXPECT_EQ(run({"trop-roots", "--poly", "0T^2+5T+5"}).out, "{5,0}\n");
  EXPECT_EQ(run({"trop-box", "--roots", "0,5"}).out, "{0}T^2 + {5}T + {5}\n");
  EXPECT_EQ(run({"trop-box", "--roots", "1,1,2", "--check"}).code, 0);
  EXPECT_EQ(run({"quotients", "--hf", "S", "--poly", "T^3-T", "--at", "0"}).code, 0);
  EXPECT_EQ(run({"one-one", "--hf", "K"}).code, 0);
  EXPECT_EQ(run({"pointwise", "--hf", "S", "-p", "T+1", "-q", "T-1", "-r", "T-1"}).code, 0);
  EXPECT_EQ(run({"equal", "--hf", "K", "--left", "(T+1)*((T^2+1)*(T+1))", "--right",
                 "(T^2+1)*((T+1)*(T+1))"}).code,
            0);
  EXPECT_EQ(run({"assoc-scan", "--hf", "GF(3)", "--max-deg", "1"}).code, 0);
}

TEST(Cli, ReproSubset) {
  const CliResult r = run({"repro", "--id", "3", "--id", "12"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS  3"), std::string::npos);
  EXPECT_NE(r.out.find("2/2 passed"), std::string::npos);
}

}  // namespace
