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

#include "swgmm/slicing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <utility>

#include "swgmm/errors.hpp"
#include "swgmm/rng.hpp"

namespace swgmm {

Direction::Direction(Eigen::VectorXd theta) : theta_(std::move(theta)) {
  if (theta_.size() < 1) throw ArgumentError("direction must have dimension >= 1");
  if (!theta_.allFinite() || std::abs(theta_.norm() - 1.0) > 1e-12) {
    throw ArgumentError("direction must be a unit vector");
  }
}

Direction Direction::normalized(const Eigen::Ref<const Eigen::VectorXd>& v) {
  const double n = v.norm();
  if (!std::isfinite(n) || n == 0.0) throw ArgumentError("cannot normalize a zero vector");
  Eigen::VectorXd u = v / n;
  // One extra pass removes the last-ulp drift of the first division.
  u /= u.norm();
  return Direction(std::move(u));
}

std::vector<Direction> sample_directions(int d, int l, std::uint64_t seed) {
  if (d < 1) throw ArgumentError("direction dimension must be >= 1");
  if (l < 1) throw ArgumentError("number of directions must be >= 1");
  Rng rng = make_rng(seed);
  std::normal_distribution<double> normal;
  std::vector<Direction> dirs;
  dirs.reserve(l);
  Eigen::VectorXd v(d);
  while (static_cast<int>(dirs.size()) < l) {
    for (int j = 0; j < d; ++j) v[j] = normal(rng);
    if (v.norm() < 1e-300) continue;
    dirs.push_back(Direction::normalized(v));
  }
  return dirs;
}

SliceData::SliceData(std::vector<double> points) : points_(std::move(points)) {
  if (points_.empty()) throw ArgumentError("slice must contain at least one point");
  for (double p : points_) {
    if (!std::isfinite(p)) throw ArgumentError("slice contains non-finite values");
  }
  std::sort(points_.begin(), points_.end());
}

SliceData slice_data(const Dataset& data, const Direction& theta) {
  if (data.dim() != theta.dim()) {
    throw ArgumentError("direction dimension " + std::to_string(theta.dim()) +
                        " does not match data dimension " + std::to_string(data.dim()));
  }
  const Eigen::VectorXd proj = data.samples() * theta.theta();
  SliceData out;
  out.points_.assign(proj.data(), proj.data() + proj.size());
  std::sort(out.points_.begin(), out.points_.end());
  return out;
}

SliceModel slice_params(const GmmParams& params, const Direction& theta, double eps_var) {
  if (params.dim() != theta.dim()) {
    throw ArgumentError("direction dimension " + std::to_string(theta.dim()) +
                        " does not match model dimension " + std::to_string(params.dim()));
  }
  const int k = params.k();
  SliceModel s{params.weights, Eigen::VectorXd(k), Eigen::VectorXd(k)};
  const auto& th = theta.theta();
  for (int c = 0; c < k; ++c) {
    s.means[c] = th.dot(params.means[c]);
    s.vars[c] = std::max(th.dot(params.covariances[c] * th), eps_var);
  }
  return s;
}

SliceModel slice_model(const GmmModel& model, const Direction& theta) {
  return slice_params(model.params(), theta, model.eps_var());
}

SliceModel smooth_slice(const SliceData& slice, double bandwidth) {
  if (!(bandwidth > 0.0)) throw ArgumentError("KDE bandwidth must be positive");
  const int n = slice.size();
  SliceModel s;
  s.weights = Eigen::VectorXd::Constant(n, 1.0 / n);
  s.means = Eigen::Map<const Eigen::VectorXd>(slice.points().data(), n);
  s.vars = Eigen::VectorXd::Constant(n, bandwidth * bandwidth);
  return s;
}

double slice_pdf(const SliceModel& slice, double t) {
  double acc = 0.0;
  for (int c = 0; c < slice.k(); ++c) {
    const double v = slice.vars[c];
    const double r = t - slice.means[c];
    acc += slice.weights[c] * std::exp(-0.5 * r * r / v) / std::sqrt(2.0 * std::numbers::pi * v);
  }
  return acc;
}

}  // namespace swgmm
