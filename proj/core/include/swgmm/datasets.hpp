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

/// Points on three shapes in the plane, each perturbed by isotropic Gaussian
/// noise of standard deviation `noise`:
///   ring   - unit circle centered at (-2, 0)
///   square - perimeter of the axis-aligned square of side 2 centered at (2, 0)
///   line   - segment from (-1, 0) to (1, 0)
/// Each shape gets n/3 points; the remainder goes to the ring. Rows are
/// ordered ring, square, line. Throws ArgumentError for n < 3 or noise < 0.
Dataset gen_ring_square_line(int n, std::uint64_t seed, double noise = 0.05);

/// n samples from `model` (same stream as swgmm::sample).
Dataset gen_gmm_samples(const GmmModel& model, int n, std::uint64_t seed);

}  // namespace swgmm
