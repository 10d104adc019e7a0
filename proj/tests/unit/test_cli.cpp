#include <gtest/gtest.h>

#include <sstream>
#include <vector>

#include "cli.hpp"
#include "ellambda/error.hpp"

using namespace ellambda;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "ellambda");
  const std::string tables = std::string("--tables=") + ELLAMBDA_TEST_DATA_DIR;
  args.insert(args.begin() + 1, tables);
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ParseTau) {
  const Complex t = cli::parse_tau("0.25 + 1.5i", 128);
  EXPECT_EQ(t.re(), Real::from_double(0.25, 64));
  EXPECT_EQ(t.im(), Real::from_double(1.5, 64));
  EXPECT_EQ(cli::parse_tau("-2i", 128).im(), Real::from_int(-2, 64));
  EXPECT_EQ(cli::parse_tau("3", 128).re(), Real::from_int(3, 64));
  EXPECT_THROW(cli::parse_tau("1+", 128), Error);
  EXPECT_THROW(cli::parse_tau("i2", 128), Error);
}

TEST(Cli, OutputDigits) {
  EXPECT_EQ(cli::output_digits(256), 67);
  EXPECT_EQ(cli::output_digits(10), 1);
}

TEST(Cli, EvalLambdaAtI) {
  const CliRun r = run({"eval", "--fn", "lambda", "--tau", "i"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("0.5"), std::string::npos);
}

TEST(Cli, ClosedFormsD11) {
  const CliRun r = run({"closed-forms", "--d", "11"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("11.43359757618016406063641211187"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"eval", "--fn", "lambda", "--tau", "1+"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"closed-forms", "--d", "2"}).code, cli::kDomain);
  EXPECT_EQ(run({"eval", "--fn", "j", "--tau", "0.5+0.01i"}).code, cli::kDomain);
  EXPECT_EQ(run({"verify", "--suite", "printed-z"}).code, cli::kMismatch);
  EXPECT_EQ(run({"verify", "--suite", "printed-z", "--allow-known-discrepancies"}).code, cli::kOk);
}

TEST(Cli, JsonVerifyOutput) {
  const CliRun r = run({"--json", "verify", "--suite", "weber-cubic-roots"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out.rfind("{", 0), 0u);
  EXPECT_NE(r.out.find("\"passed\": true"), std::string::npos);
}
