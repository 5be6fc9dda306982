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
#include <functional>
#include <string>
#include <vector>

#include "swgmm/dataset.hpp"
#include "swgmm/em.hpp"
#include "swgmm/swm.hpp"

namespace swgmm::tools {

struct CompareOptions {
  int k = 10;
  int runs = 20;
  std::uint64_t seed = 0;
  /// Relative NLL gap to the best observed fit that still counts as a success.
  double delta = 0.02;
  /// Directions used to score every final model.
  int eval_projections = 500;
  SwmConfig swm;
  EmConfig em;
};

struct RunRecord {
  int run = 0;
  double nll = 0.0;
  double sw = 0.0;
  bool diverged = false;
};

struct MethodSummary {
  double success_fraction = 0.0;
  double median_nll = 0.0;
  double median_sw = 0.0;
};

struct CompareReport {
  CompareOptions options;
  std::vector<RunRecord> swm;
  std::vector<RunRecord> em;
  double best_nll = 0.0;
  MethodSummary swm_summary;
  MethodSummary em_summary;

  std::string to_json() const;
};

/// Called after each finished run with (run index, total runs).
using CompareProgress = std::function<void(int, int)>;

/// Fits EM and SWM from one shared initialization per run and scores both.
CompareReport run_compare(const Dataset& data, const CompareOptions& options,
                          const CompareProgress& progress = {});

}  // namespace swgmm::tools
