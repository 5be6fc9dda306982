// Copyright 2026 The swgmm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "swgmm/datasets.hpp"
#include "swgmm/gmm.hpp"
#include "swgmm/io.hpp"
#include "swgmm/tools/cli.hpp"

namespace swgmm {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("swgmm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static CliResult run(std::initializer_list<std::string> args) {
    std::vector<std::string> storage{"swgmm"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : storage) argv.push_back(s.c_str());
    std::ostringstream out, err;
    const int code = tools::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  static std::string slurp(const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }

  std::string gen(int n, int seed = 7) {
    const std::string out = path("data_" + std::to_string(n) + "_" + std::to_string(seed) + ".csv");
    EXPECT_EQ(run({"gen", "--dataset", "ring-square-line", "--n", std::to_string(n), "--seed",
                   std::to_string(seed), "--out", out})
                  .code,
              0);
    return out;
  }

  fs::path dir_;
};

TEST_F(Cli, GenWritesRequestedRowsDeterministically) {
  const std::string a = gen(999);
  EXPECT_EQ(load_csv(a).size(), 999);
  const std::string b = path("again.csv");
  ASSERT_EQ(run({"gen", "--dataset", "ring-square-line", "--n", "999", "--seed", "7", "--out", b}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST_F(Cli, GenValidatesFlags) {
  const CliResult zero =
      run({"gen", "--dataset", "ring-square-line", "--n", "0", "--out", path("x.csv")});
  EXPECT_EQ(zero.code, 2);
  EXPECT_NE(zero.err.find("--n"), std::string::npos);
  EXPECT_EQ(run({"gen", "--dataset", "moons", "--n", "10", "--out", path("x.csv")}).code, 2);
  EXPECT_EQ(run({"gen", "--n", "10", "--out", path("x.csv")}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST_F(Cli, FitEmSingleComponentMatchesColumnMeans) {
  const std::string data = gen(300);
  const std::string model = path("m.json");
  ASSERT_EQ(run({"fit", "--input", data, "--k", "1", "--method", "em", "--out", model}).code, 0);
  const GmmModel m = load_model(model);
  EXPECT_LT((m.means()[0] - load_csv(data).mean()).cwiseAbs().maxCoeff(), 1e-9);
}

TEST_F(Cli, FitSwmWritesSchemaAndIsDeterministic) {
  const std::string data = gen(300);
  const std::string a = path("a.json"), b = path("b.json"), trace = path("t.csv");
  for (const auto& out : {a, b}) {
    ASSERT_EQ(run({"fit", "--input", data, "--k", "10", "--method", "swm", "--seed", "3", "--iters",
                   "30", "--out", out, "--trace", trace})
                  .code,
              0);
  }
  EXPECT_EQ(slurp(a), slurp(b));
  const auto j = nlohmann::json::parse(slurp(a));
  EXPECT_EQ(j.at("dim"), 2);
  EXPECT_EQ(j.at("k"), 10);
  EXPECT_EQ(j.at("weights").size(), 10u);
  EXPECT_EQ(j.at("means").size(), 10u);
  EXPECT_EQ(j.at("covariances").size(), 10u);
  EXPECT_NO_THROW(load_model(a));
  EXPECT_EQ(slurp(trace).rfind("iteration,objective,nll\n", 0), 0u);
}

TEST_F(Cli, FitErrors) {
  const std::string data = gen(30);
  EXPECT_EQ(run({"fit", "--input", data, "--k", "31", "--method", "em", "--out", path("m.json")}).code, 2);
  EXPECT_EQ(run({"fit", "--input", data, "--k", "2", "--method", "kmeans", "--out", path("m.json")}).code,
            2);
  EXPECT_EQ(run({"fit", "--input", path("missing.csv"), "--k", "2", "--method", "em", "--out",
                 path("m.json")})
                .code,
            2);
  std::ofstream(path("bad.csv")) << "1,2\n3\n";
  const CliResult bad =
      run({"fit", "--input", path("bad.csv"), "--k", "1", "--method", "em", "--out", path("m.json")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
}

TEST_F(Cli, DivergenceExitsThreeAndFlushesTrace) {
  const std::string data = gen(60);
  const std::string trace = path("t.csv");
  const CliResult r = run({"fit", "--input", data, "--k", "2", "--method", "swm", "--lr", "1e308",
                           "--iters", "50", "--out", path("m.json"), "--trace", trace});
  EXPECT_EQ(r.code, 3);
  const std::string text = slurp(trace);
  EXPECT_EQ(text.rfind("iteration,objective,nll\n0,", 0), 0u);
  EXPECT_FALSE(fs::exists(path("m.json")));
}

TEST_F(Cli, EvalMetrics) {
  const std::string data = gen(300);
  const std::string model = path("m.json");
  ASSERT_EQ(run({"fit", "--input", data, "--k", "3", "--method", "em", "--out", model}).code, 0);

  const CliResult only = run({"eval", "--model", model, "--input", data, "--metrics", "nll"});
  ASSERT_EQ(only.code, 0);
  const auto j = nlohmann::json::parse(only.out);
  EXPECT_EQ(j.size(), 1u);
  EXPECT_EQ(j.at("nll").get<double>(), nll(load_model(model), load_csv(data)));

  const CliResult both = run({"eval", "--model", model, "--input", data});
  ASSERT_EQ(both.code, 0);
  const auto jb = nlohmann::json::parse(both.out);
  EXPECT_TRUE(jb.contains("nll"));
  EXPECT_TRUE(jb.contains("sw"));
  EXPECT_EQ(run({"eval", "--model", model, "--input", data, "--metrics", "aic"}).code, 2);
}

TEST_F(Cli, EvalSelfSamplesHaveSmallSw) {
  // Ten components laid out on the ring-square-line scale.
  std::vector<Eigen::VectorXd> means;
  std::vector<Eigen::MatrixXd> covs;
  for (int c = 0; c < 10; ++c) {
    means.push_back(Eigen::Vector2d(-3.0 + 0.65 * c, (c % 3) - 1.0));
    covs.push_back(0.05 * Eigen::Matrix2d::Identity());
  }
  const GmmModel m(Eigen::VectorXd::Constant(10, 0.1), means, covs);
  save_model(m, path("m.json"));
  save_csv(sample(m, 10000, 3), path("d.csv"));
  const CliResult r = run({"eval", "--model", path("m.json"), "--input", path("d.csv"), "--metrics", "sw",
                           "--projections", "500"});
  ASSERT_EQ(r.code, 0);
  EXPECT_LT(nlohmann::json::parse(r.out).at("sw").get<double>(), 0.1);
}

TEST_F(Cli, EvalDimensionMismatch) {
  const GmmModel m(Eigen::VectorXd::Ones(1), {Eigen::Vector3d::Zero()}, {Eigen::Matrix3d::Identity()});
  save_model(m, path("m.json"));
  EXPECT_EQ(run({"eval", "--model", path("m.json"), "--input", gen(30)}).code, 2);
}

TEST_F(Cli, Landscape) {
  EXPECT_EQ(run({"landscape", "--scenario", "1", "--grid", "1", "--out", path("l.csv")}).code, 2);
  EXPECT_EQ(run({"landscape", "--scenario", "3", "--out", path("l.csv")}).code, 2);
  ASSERT_EQ(run({"landscape", "--scenario", "1", "--n", "200", "--grid", "11", "--out", path("l1.csv")}).code,
            0);
  const std::string one = slurp(path("l1.csv"));
  EXPECT_EQ(one.rfind("mu,nll,wm\n", 0), 0u);
  EXPECT_EQ(std::count(one.begin(), one.end(), '\n'), 12);
  ASSERT_EQ(run({"landscape", "--scenario", "2", "--n", "200", "--grid", "5", "--out", path("l2.csv")}).code,
            0);
  const std::string two = slurp(path("l2.csv"));
  EXPECT_EQ(two.rfind("mu1,mu2,nll,wm\n", 0), 0u);
  EXPECT_EQ(std::count(two.begin(), two.end(), '\n'), 26);
}

TEST_F(Cli, CompareReport) {
  const std::string data = gen(150);
  EXPECT_EQ(run({"compare", "--input", data, "--k", "3", "--runs", "0", "--out", path("r.json")}).code, 2);
  const std::string a = path("a.json"), b = path("b.json");
  for (const auto& out : {a, b}) {
    ASSERT_EQ(run({"compare", "--input", data, "--k", "3", "--runs", "3", "--seed", "4", "--iters", "20",
                   "--eval-projections", "50", "--out", out})
                  .code,
              0);
  }
  EXPECT_EQ(slurp(a), slurp(b));
  const auto j = nlohmann::json::parse(slurp(a));
  EXPECT_EQ(j.at("records").at("swm").size(), 3u);
  EXPECT_EQ(j.at("records").at("em").size(), 3u);
  const double em = j.at("summary").at("em").at("success_fraction");
  const double swm = j.at("summary").at("swm").at("success_fraction");
  EXPECT_GE(em, 0.0);
  EXPECT_LE(swm, 1.0);
  EXPECT_GT(std::max(em, swm), 0.0);
}

TEST_F(Cli, SampleRoundTrip) {
  const GmmModel truth(Eigen::VectorXd::Ones(1), {Eigen::Vector2d(1.0, -2.0)},
                       {Eigen::Matrix2d::Identity()});
  save_csv(sample(truth, 5000, 1), path("d.csv"));
  ASSERT_EQ(run({"fit", "--input", path("d.csv"), "--k", "1", "--method", "em", "--out", path("m.json")}).code,
            0);
  ASSERT_EQ(run({"sample", "--model", path("m.json"), "--n", "100000", "--seed", "2", "--out", path("s.csv")})
                .code,
            0);
  const Dataset drawn = load_csv(path("s.csv"));
  EXPECT_EQ(drawn.size(), 100000);
  ASSERT_EQ(run({"fit", "--input", path("s.csv"), "--k", "1", "--method", "em", "--out", path("m2.json")})
                .code,
            0);
  EXPECT_LT((load_model(path("m2.json")).means()[0] - truth.means()[0]).norm(), 0.05);

  ASSERT_EQ(run({"sample", "--model", path("m.json"), "--n", "50", "--seed", "2", "--out", path("x.csv")}).code,
            0);
  ASSERT_EQ(run({"sample", "--model", path("m.json"), "--n", "50", "--seed", "2", "--out", path("y.csv")}).code,
            0);
  EXPECT_EQ(slurp(path("x.csv")), slurp(path("y.csv")));
}

TEST_F(Cli, SampleRejectsInvalidModel) {
  std::ofstream(path("bad.json")) << "{\"dim\": 2}";
  EXPECT_EQ(run({"sample", "--model", path("bad.json"), "--n", "5", "--out", path("s.csv")}).code, 2);
  std::ofstream(path("garbage.json")) << "not json at all";
  EXPECT_EQ(run({"sample", "--model", path("garbage.json"), "--n", "5", "--out", path("s.csv")}).code, 2);
}

}  // namespace
}  // namespace swgmm
