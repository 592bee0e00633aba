#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "regionbound/json_io.hpp"

namespace regionbound::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "regionbound");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, BoundJsonCarriesStatus) {
  const Outcome r = invoke({"bound", "--arch", "3x6x6", "--family", "bar", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["bound"], "1764");
  EXPECT_EQ(j["growth_base"], "42");
  EXPECT_EQ(j["status"], "proven");
  EXPECT_EQ(j["conjectured"], false);
}

TEST(Cli, ConjectureRequiresOptIn) {
  const Outcome refused = invoke({"bound", "--arch", "2x4x4", "--family", "star-conjecture"});
  EXPECT_EQ(refused.code, kExitPolicy);
  EXPECT_TRUE(refused.out.empty());
  const Outcome allowed = invoke(
      {"bound", "--arch", "2x4x4", "--family", "star-conjecture", "--allow-conjecture", "--format", "csv"});
  ASSERT_EQ(allowed.code, kExitOk) << allowed.err;
  EXPECT_NE(allowed.out.find("conjectured,true"), std::string::npos);
}

TEST(Cli, FormatsAgree) {
  const Outcome text = invoke({"bound", "--arch", "2x5x5x5", "--family", "star"});
  const Outcome json = invoke({"bound", "--arch", "2x5x5x5", "--family", "star", "--format", "json"});
  const Outcome csv = invoke({"bound", "--arch", "2x5x5x5", "--family", "star", "--format", "csv"});
  ASSERT_EQ(text.code, 0);
  ASSERT_EQ(json.code, 0);
  ASSERT_EQ(csv.code, 0);
  const std::string bound = Json::parse(json.out)["bound"];
  EXPECT_NE(text.out.find("bound:        " + bound + "\n"), std::string::npos);
  EXPECT_NE(csv.out.find("," + bound + ","), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({"bound", "--arch", "3x"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bound", "--arch", "3x0x2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bound", "--arch", "3x3", "--family", "nope"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bound", "--arch", "3x3", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bound"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, OracleCapsArePolicyErrors) {
  EXPECT_EQ(invoke({"oracle", "search", "--p1", "40", "--trials", "1"}).code, kExitPolicy);
  EXPECT_EQ(invoke({"oracle", "tau1", "--p1", "99"}).code, kExitPolicy);
}

TEST(Cli, SeedFallsBackToEnvironment) {
  const std::vector<std::string> args{"oracle", "search", "--p1", "4", "--trials", "20", "--format", "json"};
  auto with_flag = args;
  with_flag.insert(with_flag.end(), {"--seed", "123"});
  ::setenv("REGIONBOUND_SEED", "123", 1);
  const Outcome env = invoke(args);
  ::unsetenv("REGIONBOUND_SEED");
  const Outcome flag = invoke(with_flag);
  ASSERT_EQ(env.code, 0) << env.err;
  EXPECT_EQ(Json::parse(env.out)["seed"], Json::parse(flag.out)["seed"]);
  EXPECT_EQ(env.out, flag.out);
}

TEST(Cli, OracleNetReadsJson) {
  const auto path = std::filesystem::temp_directory_path() / "regionbound_cli_net.json";
  {
    std::ofstream f(path);
    f << R"({"layers":[{"weights":[["-1"],["1"],["1"]],"bias":["1","0","-2"]}]})";
  }
  const Outcome r = invoke({"oracle", "net", "--input", path.string(), "--format", "json"});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["regions"], 4);
}

TEST(Cli, VerifySuiteExitCode) {
  const Outcome r = invoke({"verify", "--suite", "table1"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
}

}  // namespace
}  // namespace regionbound::cli
