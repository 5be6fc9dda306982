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
#include <variant>
#include <vector>

#include "swgmm/dataset.hpp"
#include "swgmm/gmm.hpp"
#include "swgmm/slicing.hpp"

namespace swgmm {

/// Default number of midpoint quantile levels used for 1-D distances.
inline constexpr int kDefaultQuantileGrid = 512;

/// A one-dimensional marginal: either projected samples or a 1-D mixture.
using Marginal = std::variant<SliceData, SliceModel>;

/// Inverse of the empirical CDF: linear interpolation of the order statistics
/// placed at plotting positions (i - 0.5)/N, clamped to [min, max] outside.
/// Throws ArgumentError for z outside [0, 1].
double empirical_quantile(const SliceData& slice, double z);

/// sum_k w_k Phi((t - m_k) / sqrt(v_k)).
double model_cdf(const SliceModel& slice, double t);

/// Inverse of `model_cdf`, solved to 1e-10 by safeguarded Newton on the bracket
/// [min(m) - 10 sigma_max, max(m) + 10 sigma_max]. z is clamped into that bracket.
double model_quantile(const SliceModel& slice, double z);

double quantile(const Marginal& marginal, double z);

/// Monotone transport map from a model slice to a target marginal:
/// f(t) = J_y^{-1}(J_x(t)).
double transport_map(const SliceModel& from, const SliceData& to, double t);
double transport_map(const SliceModel& from, const Marginal& to, double t);

/// Inverse-CDF values sampled at midpoint levels z_i = (i - 0.5)/M.
struct QuantileGrid {
  std::vector<double> zs;
  std::vector<double> values;

  int size() const noexcept { return static_cast<int>(zs.size()); }
};

QuantileGrid quantile_grid(const Marginal& marginal, int m = kDefaultQuantileGrid);

/// (1/M sum_i |a_i - b_i|^p)^{1/p} over two grids on the same levels.
/// Throws ArgumentError for p < 1 or mismatched grids.
double wasserstein_1d(const QuantileGrid& a, const QuantileGrid& b, double p);

/// Equal-size sample sets use the exact sorted-difference formula; otherwise
/// both sides are sampled on an M-level midpoint grid.
double wasserstein_1d(const Marginal& a, const Marginal& b, double p,
                      int m = kDefaultQuantileGrid);

/// W_p^p rather than W_p; avoids a root/power round trip inside averages.
double wasserstein_1d_pow(const Marginal& a, const Marginal& b, double p,
                          int m = kDefaultQuantileGrid);

/// Non-owning view of either a model or a dataset; anything that can be sliced.
class Distribution {
 public:
  Distribution(const GmmModel& model) : ref_(&model) {}    // NOLINT(google-explicit-constructor)
  Distribution(const Dataset& data) : ref_(&data) {}       // NOLINT(google-explicit-constructor)

  int dim() const;
  Marginal slice(const Direction& theta) const;

 private:
  std::variant<const GmmModel*, const Dataset*> ref_;
};

struct SlicedWassersteinOptions {
  double p = 2.0;
  int projections = 50;
  int grid = kDefaultQuantileGrid;
  std::uint64_t seed = 0;
};

/// Monte-Carlo sliced Wasserstein distance: average of W_p^p over uniformly
/// drawn directions, then the p-th root. The directions depend only on
/// (dimension, projections, seed), so SW(a, b) == SW(b, a) exactly.
double sliced_wasserstein(const Distribution& a, const Distribution& b,
                          const SlicedWassersteinOptions& options = {});

/// Same estimate over caller-supplied directions, returned as SW_p^p.
double sliced_wasserstein_pow(const Distribution& a, const Distribution& b,
                              const std::vector<Direction>& dirs, double p,
                              int grid = kDefaultQuantileGrid);

}  // namespace swgmm
