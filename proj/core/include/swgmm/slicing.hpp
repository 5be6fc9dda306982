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

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "swgmm/dataset.hpp"
#include "swgmm/gmm.hpp"

namespace swgmm {

/// A unit vector on the sphere S^{d-1}.
class Direction {
 public:
  /// Throws ArgumentError unless |theta| = 1 within 1e-12.
  explicit Direction(Eigen::VectorXd theta);
  /// Normalizes v; throws ArgumentError for a zero or non-finite vector.
  static Direction normalized(const Eigen::Ref<const Eigen::VectorXd>& v);

  int dim() const noexcept { return static_cast<int>(theta_.size()); }
  const Eigen::VectorXd& theta() const noexcept { return theta_; }
  Direction operator-() const { return Direction(-theta_); }

 private:
  Eigen::VectorXd theta_;
};

/// `l` directions uniform on S^{d-1} (Gaussian draw, then normalize).
std::vector<Direction> sample_directions(int d, int l, std::uint64_t seed);

/// Projected samples {y_n . theta}, sorted ascending.
class SliceData {
 public:
  /// Sorts `points`. Throws ArgumentError when empty or non-finite.
  explicit SliceData(std::vector<double> points);

  int size() const noexcept { return static_cast<int>(points_.size()); }
  const std::vector<double>& points() const noexcept { return points_; }
  double min() const noexcept { return points_.front(); }
  double max() const noexcept { return points_.back(); }

 private:
  SliceData() = default;
  friend SliceData slice_data(const Dataset&, const Direction&);
  std::vector<double> points_;
};

/// A one-dimensional Gaussian mixture: the marginal of a model along a direction.
struct SliceModel {
  Eigen::VectorXd weights;
  Eigen::VectorXd means;
  Eigen::VectorXd vars;

  int k() const noexcept { return static_cast<int>(weights.size()); }
};

SliceData slice_data(const Dataset& data, const Direction& theta);

/// Means theta.mu_k, variances theta^T Sigma_k theta floored at the model's eps_var.
SliceModel slice_model(const GmmModel& model, const Direction& theta);

/// Same for raw parameters, flooring variances at `eps_var`. Covariances are
/// used as given (no symmetrization), so the variance is the full quadratic form.
SliceModel slice_params(const GmmParams& params, const Direction& theta, double eps_var);

/// Gaussian kernel density estimate of projected samples with bandwidth h:
/// an equal-weight 1-D mixture with one component of variance h^2 per sample.
SliceModel smooth_slice(const SliceData& slice, double bandwidth);

/// Pointwise density of a 1-D mixture.
double slice_pdf(const SliceModel& slice, double t);

}  // namespace swgmm
