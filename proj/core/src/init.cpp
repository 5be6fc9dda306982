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

#include "swgmm/init.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "swgmm/errors.hpp"
#include "swgmm/rng.hpp"

namespace swgmm {

GmmModel initialize_model(const Dataset& data, int k, std::uint64_t seed, double eps_var) {
  if (k < 1) throw ArgumentError("number of components must be >= 1");
  if (k > data.size()) {
    throw ArgumentError("number of components (" + std::to_string(k) +
                        ") exceeds number of samples (" + std::to_string(data.size()) + ")");
  }
  Rng rng = make_rng(seed);
  std::vector<int> idx(data.size());
  std::iota(idx.begin(), idx.end(), 0);
  // Partial Fisher-Yates: the first k slots end up a uniform k-subset.
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<int> pick(i, data.size() - 1);
    std::swap(idx[i], idx[pick(rng)]);
  }

  const int d = data.dim();
  const double spread = std::max(data.covariance().trace() / d, eps_var);
  GmmParams p;
  p.weights = Eigen::VectorXd::Constant(k, 1.0 / k);
  for (int c = 0; c < k; ++c) {
    p.means.emplace_back(data.row(idx[c]).transpose());
    p.covariances.emplace_back(spread * Eigen::MatrixXd::Identity(d, d));
  }
  return GmmModel(std::move(p), eps_var);
}

}  // namespace swgmm
