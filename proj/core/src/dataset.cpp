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

#include "swgmm/dataset.hpp"

#include <utility>

#include "swgmm/errors.hpp"

namespace swgmm {

Dataset::Dataset(SampleMatrix samples, std::optional<std::string> label)
    : samples_(std::move(samples)), label_(std::move(label)) {
  if (samples_.rows() < 1 || samples_.cols() < 1) {
    throw ArgumentError("dataset must have at least one sample of dimension >= 1");
  }
  if (!samples_.allFinite()) {
    throw ArgumentError("dataset contains non-finite values");
  }
}

Eigen::VectorXd Dataset::mean() const { return samples_.colwise().mean().transpose(); }

Eigen::MatrixXd Dataset::covariance() const {
  const SampleMatrix centered = samples_.rowwise() - samples_.colwise().mean();
  Eigen::MatrixXd cov = (centered.transpose() * centered) / static_cast<double>(size());
  return 0.5 * (cov + cov.transpose());
}

}  // namespace swgmm
