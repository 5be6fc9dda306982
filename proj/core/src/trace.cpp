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

#include "swgmm/trace.hpp"

#include <fstream>
#include <ostream>

#include "swgmm/io.hpp"

namespace swgmm {

void FitTrace::write_csv(std::ostream& out) const {
  out << "iteration,objective,nll\n";
  for (const auto& r : records) {
    out << r.iteration << ',' << format_double(r.objective) << ',' << format_double(r.nll) << '\n';
  }
}

void FitTrace::save_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot open " + path + " for writing");
  write_csv(out);
}

}  // namespace swgmm
