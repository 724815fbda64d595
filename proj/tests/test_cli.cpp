#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "dmsvp/cli.hpp"
#include "dmsvp/matrix_io.hpp"
#include "support/reference.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = dmsvp::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kWorked = "3 2\n1 0\n1 2\n2 2\n";

}  // namespace

TEST(Cli, GenLowerBound) {
  const Result r = run({"gen", "lower-bound", "--delta", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3 2\n-1 -3\n1 0\n2 3\n");
}

TEST(Cli, SolveWorkedExample) {
  const Result r = run({"svp", "solve", "--delta", "2", "-"}, kWorked);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "short_vector\nz: 1 -1\ny: 1 -1 0\nnorm: 1\n");
}

TEST(Cli, SolveUnderstatedDeltaGivesCertificate) {
  const Result r = run({"svp", "solve", "--delta", "1", "-"}, kWorked);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "certificate\nrows: 0 1\ndet: 2\n");
}

TEST(Cli, SolveVerboseTracesToStderr) {
  const Result r = run({"svp", "solve", "--delta", "2", "--verbose", "-"}, kWorked);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("test_vector"), std::string::npos);
}

TEST(Cli, OracleAndAtLeastTwo) {
  Result r = run({"svp", "oracle", "-"}, "3 2\n-1 -3\n1 0\n2 3\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("norm: 2"), std::string::npos);
  r = run({"svp", "atleast2", "-"}, "3 2\n-1 -3\n1 0\n2 3\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("at_least_2: true", 0), 0u);
}

TEST(Cli, JsonOutcome) {
  const Result r = run({"svp", "solve", "--json", "--delta", "2", "-"}, kWorked);
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "dmsvp.svp_outcome.v1");
  EXPECT_EQ(j["kind"], "short_vector");
  EXPECT_EQ(j["z"], nlohmann::json({"1", "-1"}));
  EXPECT_EQ(j["norm"], "1");
  EXPECT_FALSE(j.contains("stamp"));
}

TEST(Cli, JsonStampIsOptIn) {
  const Result r = run({"gen", "lower-bound", "--delta", "2", "--json", "--stamp", "run-7"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "dmsvp.instance.v1");
  EXPECT_EQ(j["stamp"], "run-7");
  EXPECT_EQ(j["matrix"], nlohmann::json({{"2"}}));
  EXPECT_TRUE(j["seed"].is_null());
}

TEST(Cli, GeneratorsRoundTrip) {
  const std::vector<std::vector<std::string>> commands{
      {"gen", "lower-bound", "--delta", "5"},
      {"gen", "sparsity", "--delta", "3"},
      {"gen", "random", "--delta", "3", "--rows", "7", "--cols", "3", "--seed", "11"}};
  for (const auto& c : commands) {
    const Result r = run(c);
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(dmsvp::format_document(dmsvp::parse_document(r.out)), r.out);
  }
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const std::vector<std::string> gen{"gen", "random", "--delta", "4", "--rows", "9", "--cols", "4", "--seed", "99"};
  EXPECT_EQ(run(gen).out, run(gen).out);
  const std::vector<std::string> sweep{"check", "lemma1", "--trials", "50", "--seed", "5", "--json"};
  EXPECT_EQ(run(sweep).out, run(sweep).out);
  const Result single = run({"svp", "solve", "--delta", "2", "--threads", "1", "-"}, kWorked);
  const Result many = run({"svp", "solve", "--delta", "2", "--threads", "8", "-"}, kWorked);
  EXPECT_EQ(single.out, many.out);
}

TEST(Cli, MatrixUtilities) {
  EXPECT_EQ(run({"matrix", "det", "-"}, "2 2\n1 2\n3 4\n").out, "-2\n");
  EXPECT_EQ(run({"matrix", "rank", "-"}, kWorked).out, "2\n");
  EXPECT_EQ(run({"matrix", "det", "-"}, kWorked).code, 2);
}

TEST(Cli, CheckDelta) {
  const Result r = run({"check", "delta", "--delta", "2", "--total", "-"}, kWorked);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("max_abs_full_rank_subdet: 2"), std::string::npos);
  EXPECT_NE(r.out.find("totally_delta_modular: true"), std::string::npos);
}

TEST(Cli, Sweeps) {
  const Result r = run({"check", "lemma2", "--trials", "25", "--seed", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "lemma2: 25 trials, 0 failures, PASS\n");
  EXPECT_EQ(run({"check", "lemma1", "--trials", "10"}).code, 1);
}

TEST(Cli, Verifiers) {
  EXPECT_EQ(run({"verify", "prop1", "--delta", "3"}).code, 0);
  EXPECT_EQ(run({"verify", "prop1", "--delta", "5"}).code, 2);
  const Result t3 = run({"verify", "theorem3", "--delta", "2", "-"}, "3 2\n-1 0\n0 -1\n2 2\nb: 0 0 3\n");
  EXPECT_EQ(t3.code, 0);
  EXPECT_NE(t3.out.find("theorem3: PASS"), std::string::npos);
  const Result t4 = run({"verify", "theorem4", "--delta", "2", "-"}, "2 3\n1 1 0\n-1 0 2\nb: 2 1\nc: 1 1 1\n");
  EXPECT_EQ(t4.code, 0);
  const Result boxed =
      run({"verify", "theorem4", "--delta", "2", "--box", "2,2,2", "-", "--json"},
          "2 3\n1 1 0\n-1 0 2\nb: 2 1\nc: 1 1 1\n");
  ASSERT_EQ(boxed.code, 0);
  EXPECT_EQ(nlohmann::json::parse(boxed.out)["schema"], "dmsvp.report.v1");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"svp", "solve", "-"}, kWorked).code, 1);
  EXPECT_EQ(run({"svp", "solve", "--delta", "2", "-"}, "2 2\n1 x\n").code, 1);
  EXPECT_EQ(run({"svp", "solve", "--delta", "0", "-"}, kWorked).code, 2);
  EXPECT_EQ(run({"svp", "solve", "--delta", "2", "-"}, "2 2\n0 0\n0 0\n").code, 2);
  EXPECT_EQ(run({"svp", "threshold-only"}).code, 1);
  EXPECT_EQ(run({"svp", "oracle", "--budget", "3", "-"}, kWorked).code, 3);
  EXPECT_EQ(run({"svp", "solve", "--delta", "2", "/nonexistent/file"}).code, 1);
  EXPECT_EQ(run({"gen", "random", "--delta", "2", "--rows", "1", "--cols", "3", "--seed", "1"}).code, 2);
  EXPECT_EQ(run({"svp", "--help"}).code, 0);
}
