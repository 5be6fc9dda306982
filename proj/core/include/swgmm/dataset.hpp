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
#include <optional>
#include <string>

namespace swgmm {

/// Row-major N x d sample matrix; one sample per row.
using SampleMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// N >= 1 finite samples in d dimensions, with optional provenance.
class Dataset {
 public:
  /// Throws ArgumentError when the matrix is empty or holds non-finite values.
  explicit Dataset(SampleMatrix samples, std::optional<std::string> label = std::nullopt);

  int dim() const noexcept { return static_cast<int>(samples_.cols()); }
  int size() const noexcept { return static_cast<int>(samples_.rows()); }
  const SampleMatrix& samples() const noexcept { return samples_; }
  auto row(int n) const { return samples_.row(n); }
  const std::optional<std::string>& label() const noexcept { return label_; }

  Eigen::VectorXd mean() const;
  /// Maximum-likelihood (1/N) covariance.
  Eigen::MatrixXd covariance() const;

  friend bool operator==(const Dataset& a, const Dataset& b) {
    return a.samples_.rows() == b.samples_.rows() && a.samples_.cols() == b.samples_.cols() &&
           a.samples_ == b.samples_;
  }

 private:
  SampleMatrix samples_;
  std::optional<std::string> label_;
};

}  // namespace swgmm
