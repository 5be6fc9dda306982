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
#include <optional>

#include "swgmm/dataset.hpp"
#include "swgmm/gmm.hpp"
#include "swgmm/swm.hpp"
#include "swgmm/trace.hpp"

namespace swgmm {

struct EmConfig {
  int iters = 500;
  /// Stop once |NLL_prev - NLL| / max(1, |NLL_prev|) < tol.
  double tol = 1e-7;
  double eps_var = kDefaultEpsVar;
  std::uint64_t seed = 0;

  void validate() const;
};

/// N x K posterior component probabilities; each row sums to 1.
Eigen::MatrixXd responsibilities(const GmmModel& model, const Dataset& data);

/// Classic expectation-maximization. Trace record i holds the NLL after i
/// updates; `objective` repeats the NLL so the CSV layout matches fit_swm.
/// Records flag covariance flooring and re-seeded empty components.
FitResult fit_em(const Dataset& data, int k, const EmConfig& config,
                 const std::optional<GmmModel>& init = std::nullopt);

}  // namespace swgmm
