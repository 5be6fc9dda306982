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

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "swgmm/errors.hpp"
#include "swgmm/gmm.hpp"
#include "swgmm/ot1d.hpp"
#include "swgmm/rng.hpp"

namespace swgmm {
namespace {

SliceModel gaussian(double mean, double var) {
  return SliceModel{Eigen::VectorXd::Ones(1), Eigen::VectorXd::Constant(1, mean),
                    Eigen::VectorXd::Constant(1, var)};
}

std::vector<double> normal_draws(int n, double mean, double sd, std::uint64_t seed) {
  Rng rng(seed);
  std::normal_distribution<double> normal(mean, sd);
  std::vector<double> out(n);
  for (auto& x : out) x = normal(rng);
  return out;
}

TEST(EmpiricalQuantile, PlottingPositions) {
  const SliceData odd({3.0, 1.0, 2.0});
  EXPECT_DOUBLE_EQ(empirical_quantile(odd, 0.5), 2.0);
  const SliceData two({10.0, 0.0});
  EXPECT_DOUBLE_EQ(empirical_quantile(two, 0.25), 0.0);
  EXPECT_DOUBLE_EQ(empirical_quantile(two, 0.75), 10.0);
  EXPECT_DOUBLE_EQ(empirical_quantile(two, 0.5), 5.0);
  EXPECT_DOUBLE_EQ(empirical_quantile(two, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(empirical_quantile(two, 1.0), 10.0);
  EXPECT_THROW(empirical_quantile(two, 1.5), ArgumentError);
  EXPECT_THROW(empirical_quantile(two, -0.1), ArgumentError);
}

TEST(EmpiricalQuantile, Nondecreasing) {
  const SliceData s(normal_draws(37, 0.0, 1.0, 3));
  double prev = -INFINITY;
  for (int i = 0; i <= 1000; ++i) {
    const double q = empirical_quantile(s, i / 1000.0);
    EXPECT_GE(q, prev);
    prev = q;
  }
}

TEST(ModelCdf, Examples) {
  EXPECT_DOUBLE_EQ(model_cdf(gaussian(0.0, 1.0), 0.0), 0.5);
  const SliceModel sym{Eigen::Vector2d(0.5, 0.5), Eigen::Vector2d(-1.0, 1.0), Eigen::Vector2d(1.0, 1.0)};
  EXPECT_NEAR(model_cdf(sym, 0.0), 0.5, 1e-15);
  EXPECT_NEAR(model_cdf(sym, -1e3), 0.0, 1e-300);
  EXPECT_NEAR(model_cdf(sym, 1e3), 1.0, 1e-15);
}

TEST(ModelCdf, MatchesBoostMixture) {
  const SliceModel s{Eigen::Vector3d(0.2, 0.5, 0.3), Eigen::Vector3d(-2.0, 0.5, 4.0),
                     Eigen::Vector3d(0.25, 1.0, 4.0)};
  for (double t = -5.0; t <= 9.0; t += 0.5) {
    EXPECT_NEAR(model_cdf(s, t),
                testing::mixture_cdf({0.2, 0.5, 0.3}, {-2.0, 0.5, 4.0}, {0.5, 1.0, 2.0}, t), 1e-14);
  }
}

TEST(ModelQuantile, InvertsCdf) {
  const SliceModel s{Eigen::Vector3d(0.2, 0.5, 0.3), Eigen::Vector3d(-2.0, 0.5, 4.0),
                     Eigen::Vector3d(0.25, 1.0, 4.0)};
  for (double z : {1e-6, 0.01, 0.2, 0.5, 0.77, 0.999}) {
    EXPECT_NEAR(model_cdf(s, model_quantile(s, z)), z, 1e-9);
  }
  EXPECT_NEAR(model_quantile(gaussian(3.0, 1.0), 0.5), 3.0, 1e-10);
}

TEST(TransportMap, ShiftBetweenEqualVarianceGaussians) {
  const SliceData target(normal_draws(100000, 1.0, 1.0, 8));
  const SliceModel from = gaussian(0.0, 1.0);
  for (double t = -2.0; t <= 2.0; t += 0.25) {
    EXPECT_NEAR(transport_map(from, target, t), t + 1.0, 0.05);
  }
}

TEST(TransportMap, IdentityOntoOwnQuantiles) {
  const SliceModel from{Eigen::Vector2d(0.4, 0.6), Eigen::Vector2d(-1.0, 2.0), Eigen::Vector2d(0.5, 1.5)};
  const int n = 20000;
  std::vector<double> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = model_quantile(from, (i + 0.5) / n);
  const SliceData target(pts);
  for (double t = -2.0; t <= 4.0; t += 0.5) {
    EXPECT_NEAR(transport_map(from, target, t), t, 5e-3);
  }
}

TEST(TransportMap, Monotone) {
  const SliceData target(normal_draws(513, 2.0, 3.0, 1));
  const SliceModel from{Eigen::Vector2d(0.5, 0.5), Eigen::Vector2d(-3.0, 3.0), Eigen::Vector2d(1.0, 1.0)};
  double prev = -INFINITY;
  for (double t = -10.0; t <= 10.0; t += 0.01) {
    const double f = transport_map(from, target, t);
    EXPECT_GE(f, prev);
    prev = f;
  }
}

TEST(TransportMap, PushforwardMatchesTarget) {
  const SliceData target(normal_draws(100000, -1.0, 2.0, 12));
  const SliceModel from{Eigen::Vector2d(0.3, 0.7), Eigen::Vector2d(-2.0, 1.0), Eigen::Vector2d(0.5, 1.0)};
  Rng rng(31);
  std::discrete_distribution<int> pick({0.3, 0.7});
  std::normal_distribution<double> normal;
  std::vector<double> pushed(100000);
  for (auto& x : pushed) {
    const int c = pick(rng);
    x = transport_map(from, target, from.means[c] + std::sqrt(from.vars[c]) * normal(rng));
  }
  const double d = testing::ks_statistic(pushed, [&](double t) {
    const auto& p = target.points();
    return static_cast<double>(std::upper_bound(p.begin(), p.end(), t) - p.begin()) / p.size();
  });
  EXPECT_LT(d, 0.02);
}

TEST(Wasserstein1d, IdenticalAndPointMasses) {
  const SliceData a(normal_draws(100, 0.0, 1.0, 2));
  EXPECT_EQ(wasserstein_1d(a, a, 2.0), 0.0);
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    EXPECT_DOUBLE_EQ(wasserstein_1d(SliceData({0.0}), SliceData({1.0}), p), 1.0);
    EXPECT_DOUBLE_EQ(wasserstein_1d(SliceData({0.0, 0.0, 0.0}), SliceData({1.0, 1.0}), p), 1.0);
  }
}

TEST(Wasserstein1d, EqualSizeSamplesMatchSortedDifferences) {
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = normal_draws(64, 0.0, 1.0, 100 + trial);
    const auto y = normal_draws(64, 0.5, 2.0, 200 + trial);
    for (double p : {1.0, 2.0, 3.5}) {
      EXPECT_NEAR(wasserstein_1d(SliceData(x), SliceData(y), p), testing::sorted_wasserstein(x, y, p),
                  1e-12);
    }
  }
}

TEST(Wasserstein1d, ShiftedSetsAreExactlyTheShift) {
  const auto x = normal_draws(200, 0.0, 1.0, 5);
  std::vector<double> y = x;
  for (auto& v : y) v += 2.5;
  for (double p : {1.0, 2.0, 4.0}) {
    EXPECT_NEAR(wasserstein_1d(SliceData(x), SliceData(y), p), 2.5, 1e-12);
  }
}

TEST(Wasserstein1d, GaussianClosedForm) {
  EXPECT_NEAR(wasserstein_1d(gaussian(0.0, 1.0), gaussian(2.0, 1.0), 2.0, 4096), 2.0, 1e-3);
  EXPECT_NEAR(wasserstein_1d(gaussian(0.0, 1.0), gaussian(0.0, 4.0), 2.0, 4096), 1.0, 1e-2);
  EXPECT_NEAR(std::sqrt(testing::gaussian_wasserstein_pow(0.0, 1.0, 2.0, 1.0, 2.0)), 2.0, 1e-6);
  EXPECT_NEAR(std::sqrt(testing::gaussian_wasserstein_pow(0.0, 1.0, 0.0, 2.0, 2.0)), 1.0, 1e-6);
}

TEST(Wasserstein1d, RejectsOrderBelowOne) {
  EXPECT_THROW(wasserstein_1d(SliceData({0.0}), SliceData({1.0}), 0.5), ArgumentError);
  const auto g = quantile_grid(gaussian(0.0, 1.0), 8);
  EXPECT_THROW(wasserstein_1d(g, g, 0.9), ArgumentError);
  EXPECT_THROW(wasserstein_1d(g, quantile_grid(gaussian(0.0, 1.0), 16), 2.0), ArgumentError);
}

TEST(QuantileGrid, MidpointLevels) {
  const auto g = quantile_grid(SliceData({1.0, 2.0, 3.0, 4.0}), 4);
  EXPECT_EQ(g.zs, (std::vector<double>{0.125, 0.375, 0.625, 0.875}));
  EXPECT_TRUE(std::is_sorted(g.values.begin(), g.values.end()));
}

GmmModel two_blob_model() {
  return GmmModel(Eigen::Vector2d(0.5, 0.5), {Eigen::Vector2d(-1, 0), Eigen::Vector2d(2, 1)},
                  {Eigen::Matrix2d::Identity(), 0.5 * Eigen::Matrix2d::Identity()});
}

TEST(SlicedWasserstein, SelfDistanceIsZero) {
  const GmmModel model = two_blob_model();
  const Dataset data = sample(model, 300, 1);
  EXPECT_LT(sliced_wasserstein(data, data, {2.0, 30, 256, 4}), 1e-9);
  EXPECT_LT(sliced_wasserstein(model, model, {2.0, 30, 256, 4}), 1e-9);
}

TEST(SlicedWasserstein, SymmetricUnderSharedSeed) {
  const GmmModel model = two_blob_model();
  const Dataset data = sample(model, 300, 1);
  const Dataset other = sample(model, 211, 2);
  const SlicedWassersteinOptions opt{2.0, 40, 256, 77};
  EXPECT_EQ(sliced_wasserstein(model, data, opt), sliced_wasserstein(data, model, opt));
  EXPECT_EQ(sliced_wasserstein(other, data, opt), sliced_wasserstein(data, other, opt));
}

TEST(SlicedWasserstein, RigidTranslation) {
  Rng rng(3);
  std::normal_distribution<double> normal;
  SampleMatrix a(500, 2);
  for (int i = 0; i < a.size(); ++i) a.data()[i] = normal(rng);
  const SampleMatrix b = a.rowwise() + Eigen::RowVector2d(2.0, 0.0);
  // Equal-size slices compare exactly, so each slice contributes (theta . v)^2
  // and the average approaches |v|^2 / d = 2.
  const double sw = sliced_wasserstein(Dataset(a), Dataset(b), {2.0, 2000, 512, 9});
  EXPECT_NEAR(sw * sw, 2.0, 0.1);
}

TEST(SlicedWasserstein, OrthogonalInvarianceInDistribution) {
  const GmmModel model = two_blob_model();
  const Dataset x = sample(model, 400, 5);
  const Dataset y = sample(GmmModel(Eigen::VectorXd::Ones(1), {Eigen::Vector2d(0.5, 0.5)},
                                    {2.0 * Eigen::Matrix2d::Identity()}),
                           400, 6);
  const double angle = 0.7;
  Eigen::Matrix2d rot;
  rot << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  const Dataset xr(x.samples() * rot.transpose());
  const Dataset yr(y.samples() * rot.transpose());

  std::vector<double> plain, rotated;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    plain.push_back(sliced_wasserstein(x, y, {2.0, 20, 256, seed}));
    rotated.push_back(sliced_wasserstein(xr, yr, {2.0, 20, 256, seed + 1000}));
  }
  auto mean_sd = [](const std::vector<double>& v) {
    double m = 0.0, s = 0.0;
    for (double x : v) m += x;
    m /= v.size();
    for (double x : v) s += (x - m) * (x - m);
    return std::pair{m, std::sqrt(s / (v.size() - 1))};
  };
  const auto [m1, s1] = mean_sd(plain);
  const auto [m2, s2] = mean_sd(rotated);
  const double se = std::sqrt((s1 * s1 + s2 * s2) / 20.0);
  EXPECT_LT(std::abs(m1 - m2), 3.0 * se);
}

TEST(SlicedWasserstein, DimensionMismatchThrows) {
  const Dataset a(SampleMatrix::Zero(3, 2));
  const Dataset b(SampleMatrix::Zero(3, 3));
  EXPECT_THROW(sliced_wasserstein(a, b), ArgumentError);
}

}  // namespace
}  // namespace swgmm
