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

#include <iosfwd>
#include <string>
#include <vector>

#include "swgmm/errors.hpp"

namespace swgmm {

struct TraceRecord {
  int iteration = 0;
  double objective = 0.0;
  double nll = 0.0;
  /// EM only: a covariance hit the eps_var floor during this iteration.
  bool floored = false;
  /// EM only: an empty component was re-seeded at a data point.
  bool reinitialized = false;
};

/// Per-iteration optimization history.
struct FitTrace {
  std::vector<TraceRecord> records;

  /// CSV with header `iteration,objective,nll`. Event flags are not written.
  void write_csv(std::ostream& out) const;
  void save_csv(const std::string& path) const;
};

/// Optimization produced non-finite values. Carries the trace up to the failure.
class DivergenceError : public NumericError {
 public:
  DivergenceError(const std::string& what, FitTrace trace)
      : NumericError(what), trace_(std::move(trace)) {}
  const FitTrace& trace() const noexcept { return trace_; }

 private:
  FitTrace trace_;
};

}  // namespace swgmm
