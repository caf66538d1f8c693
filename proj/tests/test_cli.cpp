#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

namespace fs = std::filesystem;
using pwp::cli::run;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("pwp_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  std::string generate(const std::string& family, int n) const {
    const std::string p = path(family + std::to_string(n) + ".csv");
    EXPECT_EQ(call({"generate", "--family", family, "--n", std::to_string(n), "-o", p}).status, 0);
    return p;
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  fs::path dir_;
};

std::vector<std::vector<double>> parse_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

TEST_F(CliTest, TransformLinearThreeMatchesClosedForm) {
  const auto r = call({"transform", generate("linear", 3), "--lambda", "1"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto t = parse_csv(r.out);
  ASSERT_EQ(t.size(), 3u);
  const double e = std::expm1(1.0);
  EXPECT_NEAR(t[1][0], 1.0 / e, 1e-11);
  EXPECT_NEAR(t[2][1], 1.0 / e, 1e-11);
  EXPECT_NEAR(t[2][0], 0.5 / e, 1e-11);
  EXPECT_EQ(t[0][0], 0.0);
  EXPECT_EQ(t[0][2], 0.0);
}

TEST_F(CliTest, TransformZeroMatrixGivesZeros) {
  const auto r = call({"transform", write("zero.csv", "0,0\n0,0\n")});
  ASSERT_EQ(r.status, 0) << r.err;
  for (const auto& row : parse_csv(r.out))
    for (double v : row) EXPECT_EQ(v, 0.0);
}

TEST_F(CliTest, RaggedCsvIsAShapeError) {
  const auto r = call({"transform", write("ragged.csv", "0,1\n0\n")});
  EXPECT_EQ(r.status, pwp::cli::kUsageError);
  EXPECT_NE(r.err.find("ShapeError"), std::string::npos);
}

TEST_F(CliTest, MissingInputFails) {
  EXPECT_NE(call({"transform", path("absent.csv")}).status, 0);
}

TEST_F(CliTest, SidecarRecordsParameters) {
  const std::string out = path("t.csv");
  ASSERT_EQ(call({"transform", generate("linear", 4), "--lambda", "2", "-o", out}).status, 0);
  const auto meta = nlohmann::json::parse(slurp(out + ".json"));
  EXPECT_DOUBLE_EQ(meta.at("lambda").get<double>(), 2.0);
  EXPECT_TRUE(meta.contains("tol"));
  EXPECT_GE(meta.at("truncation_terms").get<int>(), 1);
}

TEST_F(CliTest, TruncationFailureIsNumericalError) {
  const auto r = call({"transform", generate("circuit", 4), "--lambda", "50", "--max-terms", "3"});
  EXPECT_EQ(r.status, pwp::cli::kNumericalError);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, RankExamples) {
  const std::string l6 = generate("linear", 6);
  auto r = call({"rank", l6, "--lambda", "1", "--kind", "importance"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("ranking: 3,4 > 2,5 > 1,6"), std::string::npos) << r.out;
  for (const char* lambda : {"0.3", "1", "7"}) {
    r = call({"rank", l6, "--lambda", lambda, "--kind", "influence"});
    EXPECT_NE(r.out.find("ranking: 1 > 2 > 3 > 4 > 5 > 6"), std::string::npos) << r.out;
  }
  r = call({"rank", generate("circuit", 6), "--kind", "importance"});
  EXPECT_NE(r.out.find("ranking: 1,2,3,4,5,6"), std::string::npos) << r.out;
}

TEST_F(CliTest, RankJsonAndDirect) {
  const std::string l6 = generate("linear", 6);
  auto r = call({"rank", l6, "--format", "json"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("ranking").get<std::string>(), "3,4 > 2,5 > 1,6");
  r = call({"rank", l6, "--direct"});
  EXPECT_NE(r.out.find("ranking: 2,3,4,5 > 1,6"), std::string::npos) << r.out;
}

TEST_F(CliTest, InvalidFlagsAreUsageErrors) {
  const std::string l3 = generate("linear", 3);
  EXPECT_EQ(call({"rank", l3, "--kind", "popularity"}).status, pwp::cli::kUsageError);
  EXPECT_EQ(call({"rank", l3, "--lambda", "-1"}).status, pwp::cli::kUsageError);
  EXPECT_EQ(call({"sweep", l3, "--param", "epsilon"}).status, pwp::cli::kUsageError);
  EXPECT_EQ(call({"frobnicate"}).status, pwp::cli::kUsageError);
  EXPECT_EQ(call({"generate", "--family", "linear", "--n", "1"}).status, pwp::cli::kUsageError);
  EXPECT_EQ(call({"generate", "--family", "tree", "--n", "4"}).status, pwp::cli::kUsageError);
}

TEST_F(CliTest, LambdaSweepOnLinearThree) {
  const auto r = call({"sweep", generate("linear", 3), "--param", "lambda", "--lo", "0.5", "--hi", "4", "--format",
                       "json"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.at("crossings").size(), 1u);
  EXPECT_NEAR(j["crossings"][0].at("at").get<double>(), 2.0, 1e-9);
  EXPECT_EQ(j.at("segments").size(), 2u);
}

TEST_F(CliTest, CrossingCheckOnLinearEleven) {
  const auto r = call({"sweep", generate("linear", 11), "--param", "lambda", "--hi", "50", "--check-conjecture",
                       "--format", "json"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto c = nlohmann::json::parse(r.out).at("conjecture");
  EXPECT_EQ(c.at("total_crossings").get<int>(), 15);
  EXPECT_TRUE(c.at("order_holds").get<bool>());
}

TEST_F(CliTest, EpsilonSweepReproducesThresholds) {
  const auto r = call({"sweep", generate("linear", 6), "--param", "epsilon", "--edge", "2,4", "--base-lambda", "1",
                       "--lo", "0", "--hi", "30", "--grid", "600", "--format", "json"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const std::vector<double> expected = {0.275, 0.6875, 174.0 / 85.0, 2.75, 6.96, 23.8};
  std::vector<double> found;
  for (const auto& c : j.at("crossings"))
    if (c.at("at").get<double>() > 1e-3) found.push_back(c.at("at").get<double>());
  ASSERT_EQ(found.size(), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_NEAR(found[k], expected[k], 1e-8);
}

TEST_F(CliTest, CurvesCsvHasOneColumnPerVertex) {
  const std::string curves = path("curves.csv");
  ASSERT_EQ(call({"sweep", generate("linear", 4), "--hi", "5", "--curves", curves}).status, 0);
  const std::string text = slurp(curves);
  const auto header = text.substr(0, text.find('\n'));
  EXPECT_EQ(std::count(header.begin(), header.end(), ','), 4);
}

TEST_F(CliTest, PaperTablesPass) {
  const auto r = call({"paper-tables", "--curves-dir", path("curves")});
  EXPECT_EQ(r.status, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("3,6 > 1,2 > 4,5"), std::string::npos);
  for (const char* n : {"2", "3", "6", "11"}) EXPECT_TRUE(fs::exists(path("curves/importance_L") + n + ".csv"));
}

TEST_F(CliTest, OutputIsDeterministic) {
  const std::string l6 = generate("linear", 6);
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"transform", l6, "--lambda", "1.7"}, {"rank", l6, "--format", "json"},
        {"sweep", l6, "--hi", "20", "--format", "json"}}) {
    EXPECT_EQ(call(args).out, call(args).out);
  }
}

TEST_F(CliTest, ToleranceFromEnvironment) {
  const std::string l4 = generate("linear", 4);
  ::setenv("PWP_TOL", "not-a-number", 1);
  EXPECT_EQ(call({"transform", l4}).status, pwp::cli::kUsageError);
  ::setenv("PWP_TOL", "1e-6", 1);
  const std::string out = path("t.csv");
  EXPECT_EQ(call({"transform", l4, "-o", out}).status, 0);
  ::unsetenv("PWP_TOL");
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(slurp(out + ".json")).at("tol").get<double>(), 1e-6);
}

TEST_F(CliTest, EdgeListInput) {
  const auto r = call({"rank", write("g.edges", "a\tb\t1\nb\tc\t1\n"), "--kind", "influence"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("ranking: a > b > c"), std::string::npos) << r.out;
}

TEST_F(CliTest, GenerateFamilies) {
  auto r = call({"generate", "--family", "circuit", "--n", "6"});
  ASSERT_EQ(r.status, 0);
  const auto z = parse_csv(r.out);
  ASSERT_EQ(z.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(z[(i + 1) % 6][i], 1.0);
  r = call({"generate", "--family", "linear-eps", "--n", "6", "--eps", "0.5"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(parse_csv(r.out)[3][1], 0.5);
}

}  // namespace
