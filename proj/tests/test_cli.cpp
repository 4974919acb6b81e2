#include <gtest/gtest.h>

#include <sstream>

#include "cli_app.hpp"

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pellcf::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CfText) {
  const Invocation r = run({"cf", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[2; (1,4)] period=2\n");
}

TEST(Cli, CfJson) {
  const Invocation r = run({"cf", "2", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = pellcf::cli::Json::parse(r.out);
  EXPECT_EQ(j["result"].dump(), R"({"a0":1,"period":[2],"m":1})");
  EXPECT_EQ(j["command"], "cf");
}

TEST(Cli, CfErrors) {
  const Invocation square = run({"cf", "9"});
  EXPECT_EQ(square.code, 2);
  EXPECT_NE(square.err.find("perfect square"), std::string::npos);
  EXPECT_EQ(run({"cf", "1"}).code, 3);
  const Invocation json = run({"cf", "9", "--format", "json"});
  EXPECT_EQ(json.code, 2);
  EXPECT_EQ(pellcf::cli::Json::parse(json.out)["error"]["code"], "perfect_square");
}

TEST(Cli, SolveLists) {
  const Invocation r = run({"solve", "3", "1", "--count", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("solutions: (2,1),(7,4),(26,15)"), std::string::npos) << r.out;
}

TEST(Cli, SolveUnsolvableFamily) {
  const Invocation r = run({"solve", "15", "-4"});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("unsolvable, reason: Theorem 11"), std::string::npos) << r.out;
  const Invocation j = run({"solve", "15", "-4", "--format", "json"});
  EXPECT_EQ(j.code, 4);
  const auto parsed = pellcf::cli::Json::parse(j.out);
  EXPECT_EQ(parsed["result"]["status"], "unsolvable");
  EXPECT_EQ(parsed["result"]["basis"], "Theorem 11");
}

TEST(Cli, SolveNegativeRhs) {
  const Invocation r = run({"solve", "8", "-4", "--count", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("solutions: (2,1),(14,5)"), std::string::npos) << r.out;
}

TEST(Cli, SolveBadRhs) { EXPECT_EQ(run({"solve", "3", "2"}).code, 3); }

TEST(Cli, SolveGeneralRouteSameMath) {
  const Invocation fast = run({"solve", "24", "4", "--count", "4", "--format", "json"});
  const Invocation slow = run({"solve", "24", "4", "--count", "4", "--format", "json", "--general"});
  const auto a = pellcf::cli::Json::parse(fast.out)["result"];
  const auto b = pellcf::cli::Json::parse(slow.out)["result"];
  EXPECT_EQ(a["solutions"], b["solutions"]);
  EXPECT_EQ(a["basis"], "Theorem 9/10");
  EXPECT_EQ(b["basis"], "general solver");
}

TEST(Cli, Family) {
  const Invocation four = run({"family", "3", "4", "--count", "2"});
  EXPECT_EQ(four.code, 0);
  EXPECT_NE(four.out.find("solutions: (8,2),(62,16)"), std::string::npos) << four.out;

  const Invocation neg_one = run({"family", "1", "-1"});
  EXPECT_EQ(neg_one.code, 4);
  EXPECT_NE(neg_one.out.find("Theorem 8"), std::string::npos);

  const Invocation two = run({"family", "2", "-4"});
  EXPECT_EQ(two.code, 0);
  EXPECT_NE(two.out.find("outside Theorem 11"), std::string::npos) << two.out;
  EXPECT_NE(two.out.find("fundamental: (2,1)"), std::string::npos);

  EXPECT_EQ(run({"family", "0", "1"}).code, 3);
}

TEST(Cli, TextAndJsonAgree) {
  const Invocation text = run({"solve", "13", "-4", "--count", "3"});
  const Invocation json = run({"solve", "13", "-4", "--count", "3", "--format", "json"});
  const auto result = pellcf::cli::Json::parse(json.out)["result"];
  std::string listed;
  for (const auto& s : result["solutions"]) {
    listed += (listed.empty() ? "" : ",") + std::string("(") + s["x"].get<std::string>() + "," +
              s["y"].get<std::string>() + ")";
  }
  EXPECT_NE(text.out.find("solutions: " + listed + "\n"), std::string::npos) << text.out << json.out;
}

TEST(Cli, VerifyTheoremsTrivialRange) {
  const Invocation r = run({"verify-theorems", "--a", "1..1", "--n", "1"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
}

TEST(Cli, VerifyTheoremsNotesExcludedHypothesis) {
  const Invocation r = run({"verify-theorems", "--a", "1..4", "--n", "3", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = pellcf::cli::Json::parse(r.out);
  EXPECT_TRUE(j["result"]["passed"].get<bool>());
  bool noted = false;
  for (const auto& n : j["result"]["notes"]) {
    const auto s = n.get<std::string>();
    if (s.find("Thm 11 hypothesis excluded for a=2") != std::string::npos &&
        s.find("general solver: solvable") != std::string::npos) {
      noted = true;
    }
  }
  EXPECT_TRUE(noted) << r.out;
}

TEST(Cli, JsonRoundTripsByteIdentically) {
  for (auto args : std::vector<std::vector<std::string>>{
           {"cf", "61", "--format", "json"},
           {"solve", "61", "1", "--count", "5", "--format", "json"},
           {"family", "7", "4", "--count", "3", "--format", "json"},
           {"solve", "3", "-1", "--format", "json"},
           {"verify-theorems", "--a", "1..3", "--n", "2", "--format", "json"}}) {
    const Invocation r = run(args);
    ASSERT_FALSE(r.out.empty());
    EXPECT_EQ(pellcf::cli::Json::parse(r.out).dump() + "\n", r.out);
  }
}

TEST(Cli, BigIntegersAreStrings) {
  const Invocation r = run({"solve", "61", "1", "--format", "json"});
  const auto j = pellcf::cli::Json::parse(r.out);
  EXPECT_EQ(j["result"]["fundamental"]["x"], "1766319049");
  EXPECT_EQ(j["inputs"]["d"], "61");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"solve", "3"}).code, 1);
  EXPECT_EQ(run({"cf", "8", "--format", "xml"}).code, 1);
}
