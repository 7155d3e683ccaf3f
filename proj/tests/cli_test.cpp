// Runs the awstar binary end to end.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(AWSTAR_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

fs::path write_temp(const std::string& name, const std::string& body) {
  auto p = fs::temp_directory_path() / ("awstar_cli_test_" + name);
  std::ofstream(p) << body;
  return p;
}

TEST(Cli, GenThenDiagonalize) {
  auto g = run("gen --kind commuting --shape 1 --n 2 --members 3 --seed 7");
  ASSERT_EQ(g.code, 0);
  auto in = write_temp("commuting.json", g.out);
  auto d = run("diagonalize " + in.string());
  ASSERT_EQ(d.code, 0) << d.out;
  auto rep = json::parse(d.out);
  EXPECT_EQ(rep["command"], "diagonalize");
  EXPECT_TRUE(rep.contains("version"));
  EXPECT_TRUE(rep.contains("tolerance"));
  for (const auto& r : rep["result"]["residuals"]) EXPECT_LE(r.get<double>(), 1e-8);
  EXPECT_LE(rep["result"]["unitarity_defect"].get<double>(), 1e-10);
}

TEST(Cli, DimensionExample) {
  auto in = write_temp("dim.json",
                       R"({"atoms":[{"aleph":0},{"aleph":1}], "mu":[{"aleph":0},{"aleph":1}]})");
  auto r = run("dimension " + in.string());
  ASSERT_EQ(r.code, 0);
  auto rep = json::parse(r.out);
  EXPECT_EQ(rep["d"], json::parse(R"({"aleph":1})"));
  EXPECT_EQ(rep["dbar"], json::parse(R"({"aleph":2})"));
}

TEST(Cli, CompareEqualProjections) {
  std::string e = R"({"shape":[2,1],"blocks":[[[1,0],[0,0]],[[1]]]})";
  auto in = write_temp("cmp.json", R"({"e":)" + e + R"(,"f":)" + e + "}");
  auto r = run("compare " + in.string());
  ASSERT_EQ(r.code, 0);
  auto rep = json::parse(r.out);
  EXPECT_EQ(rep["y"], json::parse("[true,true]"));
  EXPECT_EQ(rep["equivalent"], true);
}

TEST(Cli, SymbolicCompareAndEquidecomp) {
  auto in = write_temp("sym.json", R"({"atoms":[{"aleph":0},{"aleph":1}],
      "e":{"mu":[0,{"aleph":1}]}, "f":{"mu":[{"aleph":0},{"aleph":1}]},
      "mu":[{"aleph":0},{"aleph":1}]})");
  auto c = run("compare " + in.string());
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(json::parse(c.out)["subequiv"], true);
  auto e = run("equidecomp " + in.string());
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(json::parse(e.out)["decomposition"].size(), 2u);
}

TEST(Cli, FunctorCheck) {
  auto g = run("gen --kind hom --shape 2,1 --n 2 --members 3 --seed 3");
  ASSERT_EQ(g.code, 0);
  auto r = run("functor-check " + write_temp("hom.json", g.out).string());
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["report"]["preserved"], true);
}

TEST(Cli, BadInputExitsWithTwo) {
  EXPECT_EQ(run("diagonalize " + write_temp("bad.json", "{not json").string()).code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("diagonalize /nonexistent/awstar.json").code, 2);
  auto odd = write_temp("odd.json", R"({"atoms":[{"aleph":0}], "mu":[3]})");
  EXPECT_EQ(run("dimension " + odd.string()).code, 2);
}

TEST(Cli, Deterministic) {
  auto a = run("gen --kind model --atoms 3 --max-index 3 --seed 11");
  auto b = run("gen --kind model --atoms 3 --max-index 3 --seed 11");
  EXPECT_EQ(a.out, b.out);
  auto in = write_temp("det.json", run("gen --kind commuting --shape 2,1 --n 2 --seed 4").out);
  EXPECT_EQ(run("diagonalize " + in.string()).out, run("diagonalize " + in.string()).out);
  EXPECT_EQ(run("selftest --seed 2").out, run("selftest --seed 2").out);
}

TEST(Cli, OutFlag) {
  auto out = fs::temp_directory_path() / "awstar_cli_test_out.json";
  fs::remove(out);
  auto r = run("gen --kind projections --shape 3 --seed 1 --out " + out.string());
  ASSERT_EQ(r.code, 0);
  std::ifstream f(out);
  json j = json::parse(f);
  EXPECT_TRUE(j.contains("e"));
}

}  // namespace
