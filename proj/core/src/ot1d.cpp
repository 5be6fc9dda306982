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

#include "swgmm/ot1d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "swgmm/errors.hpp"

namespace swgmm {

namespace {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double check_p(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw ArgumentError("Wasserstein order p must be >= 1");
  return p;
}

double abs_pow(double x, double p) {
  const double a = std::abs(x);
  return p == 2.0 ? a * a : (p == 1.0 ? a : std::pow(a, p));
}

}  // namespace

double empirical_quantile(const SliceData& slice, double z) {
  if (!(z >= 0.0 && z <= 1.0)) throw ArgumentError("quantile level must lie in [0, 1]");
  const auto& x = slice.points();
  const int n = slice.size();
  // Order statistic i (0-based) sits at level (i + 0.5)/n.
  const double pos = z * n - 0.5;
  if (pos <= 0.0) return x.front();
  if (pos >= n - 1) return x.back();
  const int i = static_cast<int>(pos);
  const double frac = pos - i;
  return x[i] + frac * (x[i + 1] - x[i]);
}

double model_cdf(const SliceModel& slice, double t) {
  double acc = 0.0;
  for (int c = 0; c < slice.k(); ++c) {
    acc += slice.weights[c] * normal_cdf((t - slice.means[c]) / std::sqrt(slice.vars[c]));
  }
  return std::clamp(acc, 0.0, 1.0);
}

double model_quantile(const SliceModel& slice, double z) {
  if (!(z >= 0.0 && z <= 1.0)) throw ArgumentError("quantile level must lie in [0, 1]");
  const double sd_max = std::sqrt(slice.vars.maxCoeff());
  double lo = slice.means.minCoeff() - 10.0 * sd_max;
  double hi = slice.means.maxCoeff() + 10.0 * sd_max;
  if (model_cdf(slice, lo) >= z) return lo;
  if (model_cdf(slice, hi) <= z) return hi;

  // Start from the weighted mean; Newton steps that leave the bracket fall back to bisection.
  double t = std::clamp(slice.weights.dot(slice.means), lo, hi);
  for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
    const double f = model_cdf(slice, t) - z;
    if (f == 0.0) return t;
    if (f < 0.0) lo = t; else hi = t;
    const double dens = slice_pdf(slice, t);
    double next = dens > 0.0 ? t - f / dens : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - t) < 1e-12) return next;
    t = next;
  }
  return t;
}

double quantile(const Marginal& marginal, double z) {
  return std::visit(
      [z](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, SliceData>) {
          return empirical_quantile(m, z);
        } else {
          return model_quantile(m, z);
        }
      },
      marginal);
}

double transport_map(const SliceModel& from, const SliceData& to, double t) {
  return empirical_quantile(to, model_cdf(from, t));
}

double transport_map(const SliceModel& from, const Marginal& to, double t) {
  return quantile(to, model_cdf(from, t));
}

QuantileGrid quantile_grid(const Marginal& marginal, int m) {
  if (m < 1) throw ArgumentError("quantile grid size must be >= 1");
  QuantileGrid g;
  g.zs.resize(m);
  g.values.resize(m);
  for (int i = 0; i < m; ++i) {
    g.zs[i] = (i + 0.5) / m;
    g.values[i] = quantile(marginal, g.zs[i]);
  }
  return g;
}

namespace {

double grid_pow(const QuantileGrid& a, const QuantileGrid& b, double p) {
  if (a.size() != b.size() || a.size() == 0) {
    throw ArgumentError("quantile grids must be nonempty and of equal size");
  }
  double acc = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    if (a.zs[i] != b.zs[i]) throw ArgumentError("quantile grids use different levels");
    acc += abs_pow(a.values[i] - b.values[i], p);
  }
  return acc / a.size();
}

}  // namespace

double wasserstein_1d(const QuantileGrid& a, const QuantileGrid& b, double p) {
  check_p(p);
  return std::pow(grid_pow(a, b, p), 1.0 / p);
}

double wasserstein_1d_pow(const Marginal& a, const Marginal& b, double p, int m) {
  check_p(p);
  const auto* sa = std::get_if<SliceData>(&a);
  const auto* sb = std::get_if<SliceData>(&b);
  if (sa && sb && sa->size() == sb->size()) {
    const auto& x = sa->points();
    const auto& y = sb->points();
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += abs_pow(x[i] - y[i], p);
    return acc / static_cast<double>(x.size());
  }
  return grid_pow(quantile_grid(a, m), quantile_grid(b, m), p);
}

double wasserstein_1d(const Marginal& a, const Marginal& b, double p, int m) {
  return std::pow(wasserstein_1d_pow(a, b, p, m), 1.0 / p);
}

int Distribution::dim() const {
  return std::visit([](const auto* x) { return x->dim(); }, ref_);
}

Marginal Distribution::slice(const Direction& theta) const {
  return std::visit(
      [&theta](const auto* x) -> Marginal {
        using T = std::decay_t<decltype(*x)>;
        if constexpr (std::is_same_v<T, Dataset>) {
          return slice_data(*x, theta);
        } else {
          return slice_model(*x, theta);
        }
      },
      ref_);
}

double sliced_wasserstein_pow(const Distribution& a, const Distribution& b,
                              const std::vector<Direction>& dirs, double p, int grid) {
  check_p(p);
  if (a.dim() != b.dim()) {
    throw ArgumentError("sliced Wasserstein inputs have dimensions " + std::to_string(a.dim()) +
                        " and " + std::to_string(b.dim()));
  }
  if (dirs.empty()) throw ArgumentError("sliced Wasserstein needs at least one direction");
  double acc = 0.0;
  for (const auto& theta : dirs) {
    acc += wasserstein_1d_pow(a.slice(theta), b.slice(theta), p, grid);
  }
  return acc / static_cast<double>(dirs.size());
}

double sliced_wasserstein(const Distribution& a, const Distribution& b,
                          const SlicedWassersteinOptions& options) {
  if (a.dim() != b.dim()) {
    throw ArgumentError("sliced Wasserstein inputs have dimensions " + std::to_string(a.dim()) +
                        " and " + std::to_string(b.dim()));
  }
  const auto dirs = sample_directions(a.dim(), options.projections, options.seed);
  return std::pow(sliced_wasserstein_pow(a, b, dirs, options.p, options.grid), 1.0 / options.p);
}

}  // namespace swgmm
