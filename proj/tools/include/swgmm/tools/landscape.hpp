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

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

namespace swgmm::tools {

struct LandscapeOptions {
  int n = 5000;
  int grid = 401;
  std::uint64_t seed = 0;
  double lo = -10.0;
  double hi = 10.0;
  double p = 2.0;
  /// Quantile grid used for the 1-D Wasserstein integrals.
  int quantile_points = 1024;
};

/// Scenario 1: data from N(0, 1), one unit-variance Gaussian with mean mu.
struct Landscape1 {
  std::vector<double> mu;
  std::vector<double> nll;
  std::vector<double> wm;

  void write_csv(std::ostream& out) const;
};

/// Scenario 2: data from 0.5 N(-4, 1) + 0.5 N(4, 1), equal-weight unit-variance
/// pair with means (mu1, mu2). Matrices are indexed (i, j) -> (axis[i], axis[j]).
struct Landscape2 {
  std::vector<double> axis;
  Eigen::MatrixXd nll;
  Eigen::MatrixXd wm;

  void write_csv(std::ostream& out) const;
};

Landscape1 landscape_scenario1(const LandscapeOptions& options);
Landscape2 landscape_scenario2(const LandscapeOptions& options);

}  // namespace swgmm::tools
