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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "swgmm/dataset.hpp"
#include "swgmm/gmm.hpp"

namespace swgmm {

/// {"dim", "k", "weights", "means", "covariances"}; row-major, full symmetric
/// storage, doubles written with round-trip precision.
std::string model_to_json(const GmmModel& model, int indent = 2);

/// Throws ParseError on malformed JSON or schema violations and
/// InvalidModelError when the parsed parameters violate model invariants.
GmmModel model_from_json(const std::string& text, double eps_var = kDefaultEpsVar);

void save_model(const GmmModel& model, const std::filesystem::path& path);
GmmModel load_model(const std::filesystem::path& path, double eps_var = kDefaultEpsVar);

/// Headerless CSV, one sample per row, `%.17g` formatting.
void write_csv(const Dataset& data, std::ostream& out);
/// Throws ParseError naming the offending line for ragged rows, non-numeric
/// cells and empty input.
Dataset read_csv(std::istream& in, std::string label = {});

void save_csv(const Dataset& data, const std::filesystem::path& path);
Dataset load_csv(const std::filesystem::path& path);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace swgmm
