#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "kcl/oracle.hpp"

namespace kcl::cli {
namespace {

namespace fs = std::filesystem;

const std::string kG9 = std::string(KCL_FIXTURE_DIR) + "/g9.txt";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "kcl_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::vector<std::string> read_lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

TEST(CliList, CountsExampleGraph) {
  auto r = call({"list", "--input", kG9, "--k", "4", "--count-only"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out.rfind("cliques=14 time_ms=", 0), 0u) << r.out;
  EXPECT_NE(r.out.find(" peak_kN="), std::string::npos);
  EXPECT_NE(r.out.find(" resets=0 pruned="), std::string::npos);
}

TEST(CliList, BaselineAndAboveOmega) {
  EXPECT_EQ(call({"list", "--input", kG9, "--k", "4", "--algo", "baseline", "--count-only"}).out.substr(0, 11),
            "cliques=14 ");
  EXPECT_EQ(call({"list", "--input", kG9, "--k", "9", "--count-only"}).out.substr(0, 10), "cliques=0 ");
  EXPECT_EQ(call({"list", "--input", kG9, "--k", "3", "--threads", "4", "--tau", "40"}).out.substr(0, 11),
            "cliques=32 ");
}

TEST(CliList, WritesOriginalLabels) {
  auto path = scratch("g9_k5.txt");
  auto r = call({"list", "--input", kG9, "--k", "5", "--output", path.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(read_lines(path), (std::vector<std::string>{"4 5 6 7 8"}));

  auto relabeled = scratch("relabeled.txt");
  std::ofstream(relabeled) << "# triangle with a tail\n100 7\n7 -2\n-2 100\n100 5000\n";
  auto out = scratch("relabeled_k3.txt");
  ASSERT_EQ(call({"list", "--input", relabeled.string(), "--k", "3", "--output", out.string()}).code, kOk);
  EXPECT_EQ(read_lines(out), (std::vector<std::string>{"-2 7 100"}));
}

TEST(CliList, BadArguments) {
  EXPECT_EQ(call({"list", "--input", kG9, "--k", "1"}).code, kBadArguments);
  EXPECT_EQ(call({"list", "--input", kG9}).code, kBadArguments);
  EXPECT_EQ(call({"list", "--input", kG9, "--k", "4", "--algo", "fast"}).code, kBadArguments);
  EXPECT_EQ(call({"list", "--input", "/nonexistent/graph.txt", "--k", "3"}).code, kBadArguments);
  EXPECT_EQ(call({"list", "--input", kG9, "--k", "3", "--threads", "0"}).code, kBadArguments);
  EXPECT_EQ(call({}).code, kBadArguments);
  EXPECT_EQ(call({"--help"}).code, kOk);
}

TEST(CliList, ParseError) {
  auto bad = scratch("bad.txt");
  std::ofstream(bad) << "1 2\n3 four\n";
  auto r = call({"list", "--input", bad.string(), "--k", "3"});
  EXPECT_EQ(r.code, kParseError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST(CliList, TimeLimitDiscardsOutput) {
  auto g = oracle::random_gnp(300, 0.7, 1);
  auto input = scratch("dense.txt");
  {
    std::ofstream f(input);
    for (auto [u, v] : g.edges()) f << u << ' ' << v << '\n';
  }
  auto out = scratch("dense_out.txt");
  auto r = call({"list", "--input", input.string(), "--k", "12", "--algo", "baseline", "--output", out.string(),
                 "--time-limit", "0.05"});
  EXPECT_EQ(r.code, kTimeLimit);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(fs::exists(out));
}

TEST(CliBench, ExampleSweep) {
  auto csv = scratch("g9.csv");
  auto r = call({"bench", "--input", kG9, "--kmin", "3", "--kmax", "4", "--csv", csv.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto lines = read_lines(csv);
  ASSERT_EQ(lines.size(), 7u);
  EXPECT_EQ(lines[0],
            "dataset,k,config,threads,time_ms,clique_count,listing_calls,dense_calls,ist_calls,pruned,peak_kN,"
            "resets,status");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> f;
    std::stringstream ss(lines[i]);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    ASSERT_EQ(f.size(), 13u) << lines[i];
    EXPECT_EQ(f[0], "g9");
    EXPECT_EQ(f[5], f[1] == "3" ? "32" : "14") << lines[i];
    EXPECT_EQ(f[12], "ok");
  }
}

TEST(CliBench, TimeoutRow) {
  auto g = oracle::random_gnp(300, 0.7, 1);
  auto input = scratch("dense_bench.txt");
  {
    std::ofstream f(input);
    for (auto [u, v] : g.edges()) f << u << ' ' << v << '\n';
  }
  auto csv = scratch("timeout.csv");
  auto r = call({"bench", "--input", input.string(), "--kmin", "12", "--kmax", "12", "--csv", csv.string(),
                 "--configs", "baseline", "--time-limit", "0.05"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto lines = read_lines(csv);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[1], "dense_bench,12,baseline,1,,,,,,,,,timeout");
}

TEST(CliBench, RejectsUnknownConfig) {
  auto csv = scratch("x.csv");
  EXPECT_EQ(call({"bench", "--input", kG9, "--kmin", "3", "--kmax", "4", "--csv", csv.string(), "--configs",
                  "memo,turbo"})
                .code,
            kBadArguments);
  EXPECT_EQ(call({"bench", "--input", kG9, "--kmin", "5", "--kmax", "4", "--csv", csv.string()}).code,
            kBadArguments);
}

TEST(CliOracle, ListsSortedCliques) {
  auto r = call({"oracle", "--input", kG9, "--k", "4"});
  ASSERT_EQ(r.code, kOk);
  std::vector<std::string> lines;
  std::stringstream ss(r.out);
  for (std::string line; std::getline(ss, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 15u);
  EXPECT_EQ(lines[0], "cliques=14");
  EXPECT_EQ(lines[1], "0 2 3 7");
}

TEST(CliOracle, RefusesLargeGraphs) {
  auto g = oracle::random_gnp(100, 0.1, 4);
  auto input = scratch("n100.txt");
  {
    std::ofstream f(input);
    for (auto [u, v] : g.edges()) f << u << ' ' << v << '\n';
  }
  EXPECT_EQ(call({"oracle", "--input", input.string(), "--k", "3"}).code, kBadArguments);
}

}  // namespace
}  // namespace kcl::cli
