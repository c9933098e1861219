#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "rltl_tools/cli.hpp"

using namespace rltl;

namespace {
struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("rltl_cli_test_" + name)).string();
}
}  // namespace

TEST(Cli, Eval) {
  CliRun r = run({"eval", "--formula", "G p", "--word", "| {p} {}"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "0011\n");
}

TEST(Cli, Translate) {
  CliRun r = run({"translate", "--formula", "G p", "--threshold", "0011"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "G F p\n");
}

TEST(Cli, AutomatonIsJson) {
  CliRun r = run({"automaton", "--formula", "G p", "--threshold", "0111", "--stage", "dpa"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out.front(), '{');
}

TEST(Cli, Solve) {
  CliRun r = run({"solve", "--game", rltl::testing::game_path("bad_move.json"), "--threshold", "0111"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("threshold 0111: 0=P1"), std::string::npos) << r.out;
}

TEST(Cli, Monitor) {
  CliRun r = run({"monitor", "--game", rltl::testing::game_path("bad_move.json"), "--prefix", "0 1 4"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "0011 0011 0111\nbad move by player 1 at position 2\n");
}

TEST(Cli, AdaptiveThenVerify) {
  const std::string file = temp_file("adaptive.json");
  CliRun r = run({"adaptive", "--game", rltl::testing::game_path("second_chance.json"), "-o", file});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  CliRun v = run({"verify", "--game", rltl::testing::game_path("second_chance.json"), "--strategy", file});
  EXPECT_EQ(v.code, cli::kOk) << v.out << v.err;
  EXPECT_EQ(v.out.rfind("ok:", 0), 0u);
  std::filesystem::remove(file);
}

TEST(Cli, StronglyAdaptive) {
  const std::string file = temp_file("strong.json");
  CliRun ok = run({"strongly-adaptive", "--game", rltl::testing::game_path("bad_move.json"), "-o", file});
  EXPECT_EQ(ok.code, cli::kOk) << ok.err;
  EXPECT_NE(ok.out.find("moves: 0->1"), std::string::npos) << ok.out;
  CliRun v = run({"verify", "--game", rltl::testing::game_path("bad_move.json"), "--strategy", file, "--strongly"});
  EXPECT_EQ(v.code, cli::kOk) << v.out;
  CliRun none = run({"strongly-adaptive", "--game", rltl::testing::game_path("no_strongly_adaptive.json"), "-o", file});
  EXPECT_EQ(none.code, cli::kNoStrategy);
  EXPECT_EQ(none.out.rfind("none", 0), 0u);
  std::filesystem::remove(file);
}

TEST(Cli, Errors) {
  EXPECT_EQ(run({}).code, cli::kError);
  EXPECT_EQ(run({"eval", "--formula", "p U", "--word", "| {}"}).code, cli::kError);
  CliRun bad = run({"translate", "--formula", "G p", "--threshold", "0101"});
  EXPECT_EQ(bad.code, cli::kError);
  EXPECT_NE(bad.err.find("error:"), std::string::npos);
  EXPECT_EQ(run({"solve", "--game", "/nonexistent/game.json"}).code, cli::kError);
}
