#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "tutte/corpus.hpp"
#include "tutte/io.hpp"

using namespace tutte;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "tutte");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("tutte_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string write(const std::string& name, const io::json& j) { return write(name, j.dump()); }

  std::filesystem::path dir_;
};

SplitInstance disconnected_split() {
  Multigraph k({"u1", "u2", "k1"}, {{"u1", "k1"}}, {"u1", "u2"});
  Multigraph h({"u1", "u2", "h1"}, {{"u1", "h1"}, {"h1", "u2"}}, {"u1", "u2"});
  return {k, h, {"u1", "u2"}};
}

}  // namespace

TEST_F(Cli, PolyText) {
  const auto f = write("tri.json", io::to_json(corpus::triangle()));
  auto r = run({"poly", f});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x^2 + x + y\n");
  r = run({"poly", f, "--method", "negami"});
  EXPECT_EQ(r.out, "t*x^3 + 3*t*x^2*y + 3*t^2*x*y^2 + t^3*y^3\n");
  r = run({"poly", f, "--method", "oracle"});
  EXPECT_EQ(r.out, "x^2 + x + y\n");
}

TEST_F(Cli, PolyJson) {
  const auto f = write("tri.json", io::to_json(corpus::triangle()));
  const auto r = run({"poly", f, "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = io::json::parse(r.out);
  EXPECT_EQ(j["polynomial"], "x^2 + x + y");
  EXPECT_EQ(j["terms"].size(), 3u);
  const auto n = io::json::parse(run({"poly", f, "--format", "json", "--method", "negami"}).out);
  EXPECT_EQ(n["terms"][0].size(), 4u);
}

TEST_F(Cli, SplitRegions) {
  const auto f = write("c4.json", io::to_json(corpus::four_cycle_split()));
  EXPECT_EQ(run({"split", f, "--x", "2", "--y", "3"}).out, "region: generic, value: 17\n");
  EXPECT_EQ(run({"split", f, "--x", "2", "--y", "2"}).out, "region: hyperbola_singular(1), value: 16\n");
  EXPECT_EQ(run({"split", f, "--x", "1", "--y", "7"}).out, "region: x_one_line, value: 10\n");
  EXPECT_EQ(run({"split", f, "--x", "7", "--y", "1"}).out, "region: y_one_line, value: 400\n");
  EXPECT_EQ(run({"split", f, "--x", "1", "--y", "1"}).out, "region: point_one_one, value: 4\n");
  EXPECT_EQ(run({"split", f, "--x=-1", "--y=1/2"}).code, 0);
}

TEST_F(Cli, SplitCoeffsAndCheck) {
  const auto f = write("c4.json", io::to_json(corpus::four_cycle_split()));
  auto r = run({"split", f, "--x", "2", "--y", "3", "--coeffs", "--check"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("order: 12 1|2"), std::string::npos);
  EXPECT_NE(r.out.find("check: ok (direct 17)"), std::string::npos);
  r = run({"split", f, "--x", "3/2", "--y", "5", "--coeffs", "--check", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = io::json::parse(r.out);
  EXPECT_EQ(j["check"], "ok");
  EXPECT_EQ(j["value"], j["direct"]);
  EXPECT_EQ(j["coeffs"]["n"], 2);
  EXPECT_EQ(j["coeffs"]["order"][1], "1|2");
  EXPECT_EQ(j["coeffs"]["entries"].size(), 2u);
}

TEST_F(Cli, Presets) {
  const auto f = write("c4.json", io::to_json(corpus::four_cycle_split()));
  EXPECT_EQ(run({"split", f, "--preset", "spanning-trees"}).out, "region: point_one_one, value: 4\n");
  EXPECT_EQ(run({"split", f, "--preset", "spanning-subgraphs"}).out, "region: x_one_line, value: 5\n");
  EXPECT_EQ(run({"split", f, "--preset", "spanning-forests"}).out, "region: y_one_line, value: 15\n");
  // Chromatic polynomial of C4 at 3 colours is 18; T(C4; -2, 0) = -6 and P = (-1)^3 * 3 * T.
  EXPECT_EQ(run({"split", f, "--preset", "chromatic", "--x=-2"}).out, "region: generic, value: -6\n");
  EXPECT_EQ(run({"split", f, "--preset", "ising", "--x", "3"}).out, "region: generic, value: 41\n");
  EXPECT_EQ(run({"split", f, "--preset", "potts:1", "--y", "3"}).code, 0);
  EXPECT_EQ(run({"split", f, "--preset", "nope"}).code, 1);
  EXPECT_EQ(run({"split", f, "--preset", "jones"}).code, 1);
}

TEST_F(Cli, ExitCodes) {
  const auto c4 = write("c4.json", io::to_json(corpus::four_cycle_split()));
  const auto disc = write("disc.json", io::to_json(disconnected_split()));
  EXPECT_EQ(run({"split", disc, "--x", "1", "--y", "3"}).code, 2);
  EXPECT_EQ(run({"split", disc, "--x", "3", "--y", "1"}).code, 2);
  EXPECT_EQ(run({"split", disc, "--x", "2", "--y", "3"}).code, 0);
  EXPECT_EQ(run({"split", c4, "--x", "2"}).code, 1);
  EXPECT_EQ(run({"split", c4, "--x", "2", "--y", "1/0"}).code, 1);
  EXPECT_EQ(run({"split", c4, "--x", "two", "--y", "1"}).code, 1);
  EXPECT_EQ(run({"split", (dir_ / "missing.json").string(), "--x", "2", "--y", "3"}).code, 1);
  EXPECT_EQ(run({"split", write("bad.json", std::string("{not json")), "--x", "2", "--y", "3"}).code, 1);
  EXPECT_EQ(run({"poly", c4}).code, 1);
  EXPECT_EQ(run({"poly", write("g.json", io::to_json(corpus::triangle())), "--method", "magic"}).code, 1);
  EXPECT_EQ(run({"poly", write("g.json", io::to_json(corpus::triangle())), "--format", "xml"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);

  io::json shared = io::to_json(corpus::four_cycle_split());
  shared["H"]["vertices"].push_back("k1");
  shared["H"]["edges"].push_back({"k1", "u1"});
  EXPECT_EQ(run({"split", write("shared.json", shared), "--x", "2", "--y", "3"}).code, 1);
}

TEST_F(Cli, VerifyFile) {
  const auto f = write("c4.json", io::to_json(corpus::four_cycle_split()));
  auto r = run({"verify", f});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS A_4 matches reference"), std::string::npos);
  EXPECT_NE(r.out.find("checks passed"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);

  r = run({"verify", write("g.json", io::to_json(corpus::triangle())), "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = io::json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_GT(j["checks"].size(), 8u);
}

TEST_F(Cli, VerifyCorpus) {
  const auto r = run({"verify", "--seed", "9", "--count", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = io::json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_GT(j["checks"].size(), 100u);
}

TEST_F(Cli, Bench) {
  const auto f = write("c4.json", io::to_json(corpus::four_cycle_split()));
  auto r = run({"bench", f});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("all values equal"), std::string::npos);
  r = run({"bench", f, "--x", "2", "--y", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = io::json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["points"][0]["value"], "17");
}

TEST_F(Cli, VerifyEmptyCorpus) {
  const auto r = run({"verify", "--count", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("8/8 checks passed"), std::string::npos) << r.out;
}
