#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "redei");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = redei::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(REDEI_DATA_DIR) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "redei_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::size_t count_lines(const std::string& s, bool skip_comments) {
  std::istringstream in(s);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);)
    if (!(skip_comments && !line.empty() && line[0] == '#')) ++n;
  return n;
}

TEST(Cli, DirectionsText) {
  const auto r = run({"directions", "--set", data("e1.pts")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# redei 1.0.0"), std::string::npos);
  EXPECT_NE(r.out.find("# field: GF(4)"), std::string::npos);
  EXPECT_NE(r.out.find("D = {0, 1, inf}"), std::string::npos);
}

TEST(Cli, InvariantsJson) {
  const auto r = run({"--format", "json", "invariants", "--set", data("e1.pts")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = redei::Json::parse(r.out);
  EXPECT_EQ(j["tool"]["name"], "redei");
  EXPECT_EQ(j["command"], "invariants");
  EXPECT_EQ(j["field"]["q"], 4);
  EXPECT_EQ(j["result"]["s"], 2);
  EXPECT_EQ(j["result"]["t"], 2);
  EXPECT_EQ(j["result"]["degXH"], 2);
}

TEST(Cli, VerifyThmMOnE1) {
  const auto r = run({"--format", "json", "verify", "--set", data("e1.pts"), "--statement", "thm-m"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = redei::Json::parse(r.out);
  const auto& v = j["result"]["verdicts"][0];
  EXPECT_EQ(v["statement"], "thm-m");
  EXPECT_EQ(v["case"], "1<s");
  EXPECT_TRUE(v["applicable"].get<bool>());
}

TEST(Cli, VerifyAllStatementsOnCollinearTriple) {
  const auto r = run({"verify", "--set", data("collinear3_gf5.pts")});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("t=q"), std::string::npos);
}

TEST(Cli, RedeiRejectsCsv) {
  EXPECT_EQ(run({"--format", "csv", "redei", "--set", data("e1.pts")}).code, 1);
  EXPECT_EQ(run({"redei", "--set", data("e1.pts")}).code, 0);
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"directions", "--set", data("missing.pts")}).code, 1);
  EXPECT_EQ(run({"verify", "--set", data("e1.pts"), "--statement", "thm-x"}).code, 1);
  EXPECT_EQ(run({"search", "--q", "6"}).code, 1);
  EXPECT_EQ(run({"search", "--q", "4", "--mode", "random"}).code, 1);  // no seed

  const auto bad = scratch("bad.pts");
  std::ofstream(bad) << "2 2\n0 7\n";
  EXPECT_EQ(run({"directions", "--set", bad.string()}).code, 1);
}

TEST(Cli, SearchCsvHasOneRowPerSet) {
  const auto r = run({"--format", "csv", "search", "--q", "3", "--n-min", "1", "--n-max", "9"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines(r.out, true), 1u + 511u);  // header and rows
  EXPECT_NE(r.out.find("set_id,n,D_size,s,t,degXH,case,holds"), std::string::npos);
}

TEST(Cli, SearchOutputDoesNotDependOnWorkers) {
  const std::vector<std::string> base{"--format", "json", "search", "--q", "4", "--n-max", "5", "--statement", "thm-m", "--statement", "s-le-t"};
  auto a = base, b = base;
  a.insert(a.end(), {"--workers", "1"});
  b.insert(b.end(), {"--workers", "2"});
  auto ja = redei::Json::parse(run(a).out), jb = redei::Json::parse(run(b).out);
  ja["config"].erase("workers");
  jb["config"].erase("workers");
  EXPECT_EQ(ja.dump(), jb.dump());
  EXPECT_FALSE(ja["result"].contains("wall_seconds"));
}

TEST(Cli, ConfigFileAndOverride) {
  const auto cfg = scratch("cfg.json");
  std::ofstream(cfg) << R"({"q": 3, "n_min": 2, "n_max": 3, "mode": "exhaustive", "symmetry": true, "statements": ["thm-m"]})";
  const auto r = run({"--format", "json", "search", "--config", cfg.string(), "--n-max", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = redei::Json::parse(r.out);
  EXPECT_EQ(j["config"]["n_max"], 4);
  EXPECT_EQ(j["config"]["symmetry"], "on");

  std::ofstream(cfg) << R"({"q": 3, "colour": "red"})";
  EXPECT_EQ(run({"search", "--config", cfg.string()}).code, 1);
}

TEST(Cli, HuntReportsMaximalSets) {
  const auto r = run({"hunt", "--q", "3", "--conjecture", "conj-2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("maximal sets:"), std::string::npos);
  EXPECT_NE(r.out.find("counterexamples: 0"), std::string::npos);
}

TEST(Cli, VerifyReportsAFailedConjecture) {
  const auto r = run({"verify", "--set", data("conj1_witness_gf9.pts"), "--statement", "conj-1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("[FAIL] t(y) = s(y) at y=0: 3 = 1"), std::string::npos);
}

TEST(Cli, HuntWritesReplayFiles) {
  const auto dir = scratch("replay");
  std::filesystem::remove_all(dir);
  const auto r = run({"hunt", "--q", "9", "--mode", "random", "--seed", "7", "--budget", "2000", "--replay-dir", dir.string()});
  ASSERT_EQ(r.code, 2) << r.err;
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    ++files;
    EXPECT_EQ(run({"verify", "--set", e.path().string(), "--statement", "conj-1"}).code, 2);
  }
  EXPECT_GT(files, 0u);
}

TEST(Cli, RealizeRoundTrip) {
  const auto spec = scratch("spec.json");
  std::ofstream(spec) << R"({"p": 2, "h": 2, "s": 2, "d": 2, "n": 1, "projection_matrix": [[1, 0, 0], [0, 1, 2]]})";
  const auto r = run({"--format", "json", "realize", "--spec", spec.string()});
  ASSERT_EQ(r.code, 0) << r.err << r.out;
  const auto j = redei::Json::parse(r.out);
  EXPECT_TRUE(j["result"]["directions_match"].get<bool>());
}

TEST(Cli, CompleteAndExamples) {
  const auto r = run({"complete", "--set", data("collinear3_gf5.pts")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"complete", "--set", data("e1.pts"), "--alpha", "2"}).code, 1);
  EXPECT_EQ(run({"examples"}).code, 0);
}

}  // namespace
