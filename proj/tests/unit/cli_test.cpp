#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace zeroruns::cli {
namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, AllFormatsMatchFiles) {
  const GoldenCase& c = GetParam();
  for (const auto& [format, ext] : {std::pair{"plain", "txt"}, {"csv", "csv"}, {"json", "json"}}) {
    auto args = c.args;
    args.insert(args.end(), {"--format", format});
    const Outcome o = invoke(args);
    ASSERT_EQ(o.status, exit_ok) << o.err;
    EXPECT_TRUE(o.err.empty());
    const std::string path = std::string(ZERORUNS_GOLDEN_DIR) + "/" + c.name + "." + ext;
    EXPECT_EQ(o.out, slurp(path)) << path;
  }
}

INSTANTIATE_TEST_SUITE_P(
    Commands, Golden,
    ::testing::Values(GoldenCase{"count_F_6_3_2", {"count", "F", "6", "3", "2"}},
                      GoldenCase{"count_Fhat_6_4_2", {"count", "Fhat", "6", "4", "2"}},
                      GoldenCase{"matrix_4_props", {"matrix", "4", "--props"}},
                      GoldenCase{"matrix_5_palindromic_props", {"matrix", "5", "--palindromic", "--props"}},
                      GoldenCase{"table_6", {"table", "6"}},
                      GoldenCase{"table_7_palindromic", {"table", "7", "--palindromic"}}),
    [](const auto& info) { return info.param.name; });

class JsonRoundTrip : public ::testing::TestWithParam<std::vector<std::string>> {};

TEST_P(JsonRoundTrip, ReRenderIsByteIdentical) {
  auto args = GetParam();
  args.insert(args.end(), {"--format", "json"});
  const Outcome o = invoke(args);
  ASSERT_EQ(o.status, exit_ok) << o.err;
  const auto parsed = nlohmann::ordered_json::parse(o.out);
  EXPECT_EQ(parsed.dump(2) + "\n", o.out);
  EXPECT_EQ(parsed.begin().key(), "command");
  EXPECT_TRUE(parsed.contains("params"));
  EXPECT_TRUE(parsed.contains("result"));
  EXPECT_TRUE(parsed.contains("provenance"));
}

INSTANTIATE_TEST_SUITE_P(
    Commands, JsonRoundTrip,
    ::testing::Values(std::vector<std::string>{"count", "F", "6", "3", "2"},
                      std::vector<std::string>{"count", "F", "300", "150", "5"},
                      std::vector<std::string>{"table", "9", "--palindromic"},
                      std::vector<std::string>{"support", "9", "--palindromic", "--formula"},
                      std::vector<std::string>{"matrix", "30", "--props"},
                      std::vector<std::string>{"seq", "t-run", "--r", "3", "--from", "1", "--count", "90"},
                      std::vector<std::string>{"compositions", "12", "--palindromic", "--stats"},
                      std::vector<std::string>{"partitions", "12"},
                      std::vector<std::string>{"partitions", "15", "9", "3", "--palindromic"},
                      std::vector<std::string>{"verify", "--max-n", "6"}));

TEST(Cli, LargeCountsAreExactDecimalStrings) {
  const Outcome o = invoke({"count", "F", "300", "150", "5", "--format", "json"});
  ASSERT_EQ(o.status, exit_ok);
  const auto j = nlohmann::ordered_json::parse(o.out);
  ASSERT_TRUE(j["result"].is_string());
  EXPECT_EQ(invoke({"count", "F", "300", "150", "5"}).out, j["result"].get<std::string>() + "\n");
}

TEST(Cli, SupportWithFormula) {
  const Outcome o = invoke({"support", "5", "--formula", "--format", "json"});
  ASSERT_EQ(o.status, exit_ok);
  const auto j = nlohmann::ordered_json::parse(o.out);
  EXPECT_EQ(j["result"]["size"], 11);
  EXPECT_EQ(j["result"]["formula"], 11);
  EXPECT_EQ(j["result"]["matches"], true);
}

TEST(Cli, SequenceAndPartitions) {
  EXPECT_EQ(invoke({"seq", "column-sum", "--k", "1", "--from", "1", "--count", "3", "--format", "csv"}).out,
            "n,value\n1,1\n2,2\n3,4\n");
  EXPECT_EQ(invoke({"partitions", "10", "7", "3"}).out, "3\n");
  EXPECT_EQ(invoke({"partitions", "15", "9", "3", "--palindromic"}).out, "4\n");
}

TEST(Cli, CompositionStats) {
  const Outcome o = invoke({"compositions", "4", "--stats", "--format", "json"});
  ASSERT_EQ(o.status, exit_ok);
  const auto j = nlohmann::ordered_json::parse(o.out);
  EXPECT_EQ(j["result"]["plus_signs_total"], 12);
  EXPECT_EQ(j["result"]["summands_total"], 20);
  EXPECT_EQ(j["result"]["by_largest_summand"][1]["count"], 4);
}

TEST(Cli, VerifyPassesAtTwelve) {
  const Outcome o = invoke({"verify", "--max-n", "12", "--suite", "all"});
  EXPECT_EQ(o.status, exit_ok) << o.out;
  EXPECT_EQ(o.out.find("FAIL"), std::string::npos);
  EXPECT_NE(o.out.find("NOTE"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  const std::vector<std::vector<std::string>> bad{
      {},
      {"frobnicate"},
      {"count", "G", "1", "1", "1"},
      {"count", "F", "6", "3"},
      {"count", "F", "6", "3", "2", "--format", "xml"},
      {"table", "5000"},
      {"matrix", "0"},
      {"seq", "lucas"},
      {"partitions", "6", "4"},
      {"verify"},
      {"verify", "--max-n", "5", "--suite", "everything"},
  };
  for (const auto& args : bad) {
    const Outcome o = invoke(args);
    EXPECT_EQ(o.status, exit_usage) << testing::PrintToString(args);
    EXPECT_FALSE(o.err.empty()) << testing::PrintToString(args);
    EXPECT_TRUE(o.out.empty()) << testing::PrintToString(args);
  }
}

TEST(Cli, HelpExitsZero) {
  const Outcome o = invoke({"--help"});
  EXPECT_EQ(o.status, exit_ok);
  EXPECT_NE(o.out.find("verify"), std::string::npos);
}

TEST(Cli, OracleCapFlagOverridesEnvironment) {
  ASSERT_EQ(setenv("ZERORUNS_ORACLE_CAP", "4", 1), 0);
  const Outcome capped = invoke({"verify", "--max-n", "6", "--suite", "core"});
  EXPECT_EQ(capped.status, exit_usage);
  EXPECT_NE(capped.err.find("oracle cap"), std::string::npos);
  const Outcome overridden = invoke({"verify", "--max-n", "6", "--suite", "core", "--oracle-cap", "8"});
  EXPECT_EQ(overridden.status, exit_ok) << overridden.err;
  ASSERT_EQ(unsetenv("ZERORUNS_ORACLE_CAP"), 0);
}

}  // namespace
}  // namespace zeroruns::cli
