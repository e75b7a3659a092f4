#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "expr_gen.hpp"
#include "qsheaf/cli.hpp"
#include "qsheaf/parse.hpp"

using namespace qsheaf;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Parse, AtomsTwistsAndNormalization) {
  EXPECT_EQ(parse("Q4: quot(O, S1 + S2)").to_string(), "Q4: quot(O, S1 + S2)");
  EXPECT_EQ(parse("Q3: O(1) + S(-2) + Pt[3]").quadric().n(), 3);
  EXPECT_EQ(parse("Q4: res(S)(1) + 0 + (O(2) + S1)(-1)").to_string(), "Q4: O(1) + S1(-1) + res(S(1))");
  EXPECT_EQ(parse("# leading comment\nQ3: O # trailing\n + O(1)").to_string(), "Q3: O + O(1)");
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    parse("Q3: O +");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 8);
  }
  try {
    parse("# c\nQ4: O +\n  S3");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 3);
  }
}

TEST(Parse, RejectsInvalidInput) {
  EXPECT_THROW(parse("Q3: S1"), ParseError);
  EXPECT_THROW(parse("Q4: S"), ParseError);
  EXPECT_THROW(parse("Q1: O"), ParseError);
  EXPECT_THROW(parse("Q3: Pt[0]"), ParseError);
  EXPECT_THROW(parse("Q3: O(1"), ParseError);
  EXPECT_THROW(parse("O(1)"), ParseError);
  EXPECT_THROW(parse("Q16: res(O)"), ParseError);
}

TEST(Parse, RoundTripsRandomExpressions) {
  rnd::Rng rng(101);
  for (int k = 0; k < 300; ++k) {
    const auto e = normalize(qtest::random_expr(2 + static_cast<int>(rng() % 4), rng, 3));
    EXPECT_EQ(parse(e.to_string()), e) << e.to_string();
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"qreg", "-e", "Q3: O"}).code, exit_code::kOk);
  EXPECT_EQ(cli({"knorrer", "-e", "Q3: quot(S(-1), O + O + O + O)"}).code, exit_code::kAmbiguous);
  EXPECT_EQ(cli({"table", "-e", "Q3: O +"}).code, exit_code::kParse);
  EXPECT_EQ(cli({"table", "-e", "Q3: quot(O(1), O)"}).code, exit_code::kInconsistent);
  EXPECT_EQ(cli({}).code, exit_code::kUsage);
  EXPECT_EQ(cli({"rank2", "-e", "Q3: S"}).code, exit_code::kUsage);
  EXPECT_EQ(cli({"table", "-e", "Q3: O", "--format", "xml"}).code, exit_code::kUsage);
}

TEST(Cli, ReadsStdin) {
  const auto r = cli({"qreg"}, "Q4: S1\n");
  EXPECT_EQ(r.code, exit_code::kOk);
  EXPECT_NE(r.out.find("Qreg = 0"), std::string::npos) << r.out;
}

TEST(Cli, JsonFields) {
  const auto r = cli({"split-check", "-e", "Q4: quot(O, S1 + S2)", "--format", "json"});
  ASSERT_EQ(r.code, exit_code::kOk);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"quadric", "expression", "cells", "window", "verdict"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["quadric"], 4);
  EXPECT_EQ(j["verdict"]["kind"], "obstructed");
  EXPECT_EQ(j["verdict"]["witness"]["i"], 3);
  EXPECT_EQ(j["verdict"]["witness"]["t"], -4);
  const auto& cell = j["cells"][0];
  for (const char* key : {"i", "t", "lo", "hi", "exact"}) EXPECT_TRUE(cell.contains(key)) << key;
}

TEST(Cli, CsvAndWindow) {
  const auto r = cli({"table", "-e", "Q3: O", "--format", "csv", "--window", "0:1"});
  ASSERT_EQ(r.code, exit_code::kOk);
  EXPECT_EQ(r.out, "i,t,lo,hi\n0,0,1,1\n1,0,0,0\n2,0,0,0\n3,0,0,0\n0,1,5,5\n1,1,0,0\n2,1,0,0\n3,1,0,0\n");
  EXPECT_EQ(cli({"table", "-e", "Q3: O", "--window", "2:1"}).code, exit_code::kUsage);
}

TEST(Cli, SpinorTwistedTable) {
  const auto r = cli({"table", "-e", "Q3: O", "--spinor", "S", "--format", "csv", "--window", "-4:-4"});
  ASSERT_EQ(r.code, exit_code::kOk);
  // h^3(Sigma(-4)) = h^0(Sigma) = 4
  EXPECT_NE(r.out.find("3,-4,4,4"), std::string::npos) << r.out;
  EXPECT_EQ(cli({"table", "-e", "Q3: O", "--spinor", "S1"}).code, exit_code::kUsage);
}

TEST(Cli, RegressionSuitePasses) {
  const auto r = cli({"verify-paper", "--seed", "7"});
  EXPECT_EQ(r.code, exit_code::kOk) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}
