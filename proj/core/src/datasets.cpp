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

#include "swgmm/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "swgmm/errors.hpp"
#include "swgmm/rng.hpp"

namespace swgmm {

Dataset gen_ring_square_line(int n, std::uint64_t seed, double noise) {
  if (n < 3) throw ArgumentError("ring-square-line needs n >= 3");
  if (!(noise >= 0.0) || !std::isfinite(noise)) throw ArgumentError("noise must be >= 0");
  const int per_shape = n / 3;
  const int n_ring = per_shape + n % 3;

  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> jitter(0.0, 1.0);

  SampleMatrix out(n, 2);
  int row = 0;
  auto emit = [&](double x, double y) {
    // Draw the jitter even at zero noise so the shape stream does not depend on it.
    const double ex = jitter(rng);
    const double ey = jitter(rng);
    out(row, 0) = x + noise * ex;
    out(row, 1) = y + noise * ey;
    ++row;
  };

  for (int i = 0; i < n_ring; ++i) {
    const double a = 2.0 * std::numbers::pi * unit(rng);
    emit(-2.0 + std::cos(a), std::sin(a));
  }
  for (int i = 0; i < per_shape; ++i) {
    // Arc length along the perimeter, counter-clockwise from the corner (1, -1).
    const double s = 8.0 * unit(rng);
    const int side = std::min(static_cast<int>(s / 2.0), 3);
    const double u = s - 2.0 * side;
    switch (side) {
      case 0: emit(1.0 + u, -1.0); break;
      case 1: emit(3.0, -1.0 + u); break;
      case 2: emit(3.0 - u, 1.0); break;
      default: emit(1.0, 1.0 - u); break;
    }
  }
  for (int i = 0; i < per_shape; ++i) {
    emit(-1.0 + 2.0 * unit(rng), 0.0);
  }
  return Dataset(std::move(out), "ring-square-line");
}

Dataset gen_gmm_samples(const GmmModel& model, int n, std::uint64_t seed) {
  return sample(model, n, seed);
}

}  // namespace swgmm
