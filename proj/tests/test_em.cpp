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
#include <cmath>

#include "swgmm/datasets.hpp"
#include "swgmm/em.hpp"
#include "swgmm/errors.hpp"
#include "swgmm/gmm.hpp"
#include "swgmm/init.hpp"
#include "swgmm/rng.hpp"

namespace swgmm {
namespace {

GmmModel separated_pair() {
  return GmmModel(Eigen::Vector2d(0.5, 0.5), {Eigen::Vector2d(-5.0, 0.0), Eigen::Vector2d(5.0, 0.0)},
                  {Eigen::Matrix2d::Identity(), Eigen::Matrix2d::Identity()});
}

TEST(FitEm, SingleComponentIsSampleMoments) {
  const Dataset data = gen_ring_square_line(600, 3);
  const FitResult r = fit_em(data, 1, EmConfig{});
  EXPECT_LT((r.model.means()[0] - data.mean()).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT((r.model.covariances()[0] - data.covariance()).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_DOUBLE_EQ(r.model.weights()[0], 1.0);
}

TEST(FitEm, RecoversSeparatedPair) {
  const Dataset data = sample(separated_pair(), 4000, 7);
  GmmParams init = initialize_model(data, 2, 1).params();
  init.means = {Eigen::Vector2d(-3.0, 1.0), Eigen::Vector2d(2.0, -1.0)};
  const FitResult r = fit_em(data, 2, EmConfig{}, GmmModel(init));
  std::vector<Eigen::VectorXd> means = r.model.means();
  std::sort(means.begin(), means.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
  EXPECT_LT((means[0] - Eigen::Vector2d(-5.0, 0.0)).norm(), 0.2);
  EXPECT_LT((means[1] - Eigen::Vector2d(5.0, 0.0)).norm(), 0.2);
}

TEST(FitEm, NllNonincreasingWithoutEvents) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Dataset data = gen_ring_square_line(900, seed);
    EmConfig cfg;
    cfg.seed = seed;
    const FitResult r = fit_em(data, 6, cfg);
    const auto& rec = r.trace.records;
    ASSERT_GE(rec.size(), 2u);
    for (std::size_t i = 1; i < rec.size(); ++i) {
      if (rec[i].floored || rec[i].reinitialized) continue;
      EXPECT_LE(rec[i].nll, rec[i - 1].nll + 1e-9) << "seed " << seed << " iteration " << i;
      EXPECT_EQ(rec[i].objective, rec[i].nll);
    }
  }
}

TEST(FitEm, ReturnsValidModelAndStopsOnTolerance) {
  const Dataset data = sample(separated_pair(), 1000, 2);
  EmConfig cfg;
  cfg.tol = 1e-3;
  const FitResult r = fit_em(data, 2, cfg);
  EXPECT_NO_THROW(GmmModel(r.model.params()));
  EXPECT_LT(r.trace.records.size(), static_cast<std::size_t>(cfg.iters + 1));
}

TEST(FitEm, ReseedsEmptyComponent) {
  // A component parked far from every sample receives no responsibility.
  const Dataset data = sample(separated_pair(), 500, 4);
  GmmParams init = initialize_model(data, 3, 1).params();
  init.means[2] = Eigen::Vector2d(1e4, 1e4);
  init.covariances[2] = 1e-4 * Eigen::Matrix2d::Identity();
  EmConfig cfg;
  cfg.iters = 5;
  const FitResult r = fit_em(data, 3, cfg, GmmModel(init));
  ASSERT_GE(r.trace.records.size(), 2u);
  EXPECT_TRUE(r.trace.records[1].reinitialized);
  EXPECT_LT(r.model.means()[2].norm(), 100.0);
}

TEST(FitEm, FlagsCovarianceFloor) {
  // Three collinear points: a single component's covariance is singular.
  SampleMatrix m(3, 2);
  m << 0.0, 0.0, 1.0, 1.0, 2.0, 2.0;
  const FitResult r = fit_em(Dataset(m), 1, EmConfig{});
  ASSERT_GE(r.trace.records.size(), 2u);
  EXPECT_TRUE(r.trace.records[1].floored);
  EXPECT_NO_THROW(GmmModel(r.model.params()));
}

TEST(Responsibilities, RowsSumToOne) {
  const GmmModel model = separated_pair();
  const Dataset data = gen_ring_square_line(300, 1);
  const Eigen::MatrixXd r = responsibilities(model, data);
  for (int i = 0; i < r.rows(); ++i) EXPECT_NEAR(r.row(i).sum(), 1.0, 1e-12);
}

TEST(FitEm, SharesInitializationWithSwm) {
  const Dataset data = gen_ring_square_line(300, 1);
  EmConfig cfg;
  cfg.iters = 1;
  cfg.seed = 5;
  const FitResult r = fit_em(data, 4, cfg);
  const GmmModel init = initialize_model(data, 4, derive_seed(5, 0));
  EXPECT_NEAR(r.trace.records.front().nll, nll(init, data), 1e-12);
}

TEST(FitEm, ValidatesArguments) {
  const Dataset data = gen_ring_square_line(30, 1);
  EXPECT_THROW(fit_em(data, 0, EmConfig{}), ArgumentError);
  EXPECT_THROW(fit_em(data, 31, EmConfig{}), ArgumentError);
  EmConfig cfg;
  cfg.iters = 0;
  EXPECT_THROW(fit_em(data, 2, cfg), ArgumentError);
}

}  // namespace
}  // namespace swgmm
