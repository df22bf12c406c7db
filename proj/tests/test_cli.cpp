#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "permsplit/cli/cli.hpp"
#include "permsplit/json_io.hpp"

namespace permsplit {
namespace {

using cli::parse_hyperplane;
using cli::run;

TEST(ParseHyperplane, Forms) {
  EXPECT_EQ(parse_hyperplane("x1+x2=4", 4), SplitHyperplane(4, Subset::of({1, 2}), 4L));
  EXPECT_EQ(parse_hyperplane("x3=2", 4), SplitHyperplane(4, Subset::of({3}), 2L));
  EXPECT_EQ(parse_hyperplane("x_{1,3}=7", 5), SplitHyperplane(5, Subset::of({1, 3}), 7L));
  EXPECT_EQ(parse_hyperplane(" x2 + x1 = 9/2 ", 4), SplitHyperplane(4, Subset::of({1, 2}), Rational(9, 2)));
}

TEST(ParseHyperplane, Errors) {
  EXPECT_THROW(parse_hyperplane("x9=2", 4), ParseError);
  EXPECT_THROW(parse_hyperplane("x1+x1=3", 4), ParseError);
  EXPECT_THROW(parse_hyperplane("x1+x2", 4), ParseError);
  EXPECT_THROW(parse_hyperplane("x1+x2=2", 4), ParseError);
  EXPECT_THROW(parse_hyperplane("y1=2", 4), ParseError);
  try {
    parse_hyperplane("x1+y2=4", 4);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(ParseSubset, Forms) {
  EXPECT_EQ(cli::parse_subset("1246"), Subset::of({1, 2, 4, 6}));
  EXPECT_EQ(cli::parse_subset("1,2,4,6"), Subset::of({1, 2, 4, 6}));
  EXPECT_EQ(cli::parse_subset("{}"), Subset());
  EXPECT_THROW(cli::parse_subset("1a"), ParseError);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"split", "check", "-n", "4", "x1+x2=5"}).exit_code, 0);
  EXPECT_EQ(run({"split", "check", "-n", "4", "x9=2"}).exit_code, 2);
  EXPECT_EQ(run({"bogus"}).exit_code, 2);
  EXPECT_EQ(run({"--format", "dot", "split", "scan", "-n", "4"}).exit_code, 2);
  EXPECT_EQ(run({"matroid", "validate", R"({"n": 3, "bases": [[1, 2], [3]]})"}).exit_code, 1);
  EXPECT_EQ(run({"verify", "-n", "3"}).exit_code, 0);
  EXPECT_EQ(run({"verify", "-n", "5"}).exit_code, 0);
}

TEST(Cli, SplitCheck) {
  const auto r = run({"--format", "json", "split", "check", "-n", "4", "x1+x2=5"});
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(Json::parse(r.out)["verdict"], "bad-square");
  const auto good = run({"split", "check", "-n", "4", "x1=2"});
  EXPECT_NE(good.out.find("good-split"), std::string::npos);
}

TEST(Cli, Bruhat) {
  EXPECT_NE(run({"bruhat", "leq", "1324", "3412"}).out.find("true"), std::string::npos);
  const auto r = run({"--format", "json", "bruhat", "interval", "1324", "3412"});
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(Json::parse(r.out)["size"], 10);
}

TEST(Cli, LpmChain) {
  const auto r = run({"--format", "json", "lpm", "chain", "-n", "8", "12:38", "1247:3568"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_FALSE(Json::parse(r.out).empty());
}

TEST(Cli, ScanAndTheorem) {
  const auto scan = run({"--format", "json", "split", "scan", "-n", "5"});
  const auto theorem = run({"--format", "json", "split", "theorem", "-n", "5"});
  ASSERT_EQ(scan.exit_code, 0);
  ASSERT_EQ(theorem.exit_code, 0);
  EXPECT_EQ(Json::parse(scan.out)["count"], 10);
  EXPECT_EQ(Json::parse(scan.out)["hyperplanes"], Json::parse(theorem.out)["hyperplanes"]);
}

TEST(Cli, PosetDotAndExport) {
  const auto dot = run({"--format", "dot", "poset", "build", "-n", "4"});
  ASSERT_EQ(dot.exit_code, 0);
  EXPECT_EQ(dot.out.rfind("digraph subdivisions_4 {", 0), 0u);

  const auto json = run({"--format", "json", "poset", "build", "-n", "4"});
  ASSERT_EQ(json.exit_code, 0);
  const auto path = std::filesystem::temp_directory_path() / "permsplit_cli_poset.json";
  std::ofstream(path) << json.out;
  const auto again = run({"--format", "json", "poset", "export", path.string()});
  EXPECT_EQ(again.exit_code, 0);
  EXPECT_EQ(Json::parse(again.out), Json::parse(json.out));
  std::filesystem::remove(path);
}

TEST(Cli, PosetSubdivideRejects) {
  const auto r = run({"--format", "json", "poset", "subdivide", "-n", "4", "x1+x2=6", "x4=2"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("new-vertex"), std::string::npos);
}

}  // namespace
}  // namespace permsplit
