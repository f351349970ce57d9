#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace {

struct CliResult {
  int status;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + GPOS_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (auto n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = ::pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "gpos_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, SolveBruteForce) {
  const auto r = run_cli("solve --graph q3 --method bf --no-timing");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("BF size 4 [optimal]"), std::string::npos) << r.out;
}

TEST(Cli, SolveHeuristicJson) {
  const auto path = scratch("q4_sa.json");
  const auto r = run_cli("solve --graph q4 --method sa --runs 3 --seed 2 --no-timing --json " + path.string());
  ASSERT_EQ(r.status, 0);
  const auto first = slurp(path);
  const auto j = nlohmann::json::parse(first);
  ASSERT_EQ(j["records"].size(), 3u);
  EXPECT_EQ(j["records"][0]["seed"], 2);
  EXPECT_EQ(j["records"][0]["params"]["max_iterations"], 10);
  ASSERT_EQ(run_cli("solve --graph q4 --method sa --runs 3 --seed 2 --no-timing --json " + path.string()).status, 0);
  EXPECT_EQ(slurp(path), first);
}

TEST(Cli, VerifyFeasibleAndInfeasible) {
  auto r = run_cli("verify --graph c6 --set 0,2,4");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("feasible"), std::string::npos);
  r = run_cli("verify --graph c6 --set 0,1,3");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("pair {0,3} witness 1"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli("verify --graph c6 --set 0,x").status, 2);
  EXPECT_EQ(run_cli("verify --graph c6 --set 0,9").status, 2);
  EXPECT_EQ(run_cli("solve --graph zz7 --method bb").status, 2);
  EXPECT_EQ(run_cli("solve --graph q3 --method nope").status, 2);
  EXPECT_EQ(run_cli("frobnicate").status, 2);
  EXPECT_EQ(run_cli("solve --graph cay:8:1,2 --method bb").status, 2);
  EXPECT_EQ(run_cli("solve --graph file:/nonexistent/g.txt --method bb").status, 2);
}

TEST(Cli, ExportLpMatchesGolden) {
  const auto r = run_cli("export-lp --graph c4 -o -");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, slurp(std::filesystem::path(GPOS_GOLDEN_DIR) / "c4.lp"));
}

TEST(Cli, GenRoundTripThroughFiles) {
  const auto el = scratch("q4.txt"), g6 = scratch("q4.g6");
  ASSERT_EQ(run_cli("gen q4 -o " + el.string()).status, 0);
  ASSERT_EQ(run_cli("gen q4 --format graph6 -o " + g6.string()).status, 0);
  const auto a = run_cli("solve --graph " + el.string() + " --method bb --no-timing");
  const auto b = run_cli("solve --graph file:" + g6.string() + " --method bb --no-timing");
  EXPECT_NE(a.out.find("BB size 5"), std::string::npos) << a.out;
  EXPECT_NE(b.out.find("BB size 5"), std::string::npos) << b.out;
}

TEST(Cli, Draw) {
  const auto dot = scratch("p3.dot");
  ASSERT_EQ(run_cli("draw --graph p3 --set 0 -o " + dot.string()).status, 0);
  const auto text = slurp(dot);
  EXPECT_EQ(text.rfind("graph \"P3\" {", 0), 0u);
  EXPECT_NE(text.find("0 [style=filled"), std::string::npos);
  EXPECT_NE(text.find("1 -- 2;"), std::string::npos);
}

TEST(Cli, BenchSubset) {
  const auto r = run_cli("bench table1 --runs 2 --only Q3 --skip-q7-exact --no-timing");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("Q3"), std::string::npos);
}
