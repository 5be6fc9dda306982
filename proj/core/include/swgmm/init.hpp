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

#include "swgmm/dataset.hpp"
#include "swgmm/gmm.hpp"

namespace swgmm {

/// Shared starting point for both fitting methods: means at k distinct data
/// rows drawn uniformly without replacement, every covariance
/// (tr(Cov(data))/d) I, uniform weights. Throws ArgumentError when k > N.
GmmModel initialize_model(const Dataset& data, int k, std::uint64_t seed,
                          double eps_var = kDefaultEpsVar);

}  // namespace swgmm
