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
#include <utility>
#include <vector>

#include "swgmm/dataset.hpp"
#include "swgmm/gmm.hpp"
#include "swgmm/slicing.hpp"
#include "swgmm/trace.hpp"

namespace swgmm {

/// Which derivative drives the parameter update.
enum class GradientRule {
  /// Differentiate the transport cost |f(t) - t|^p against the model slice
  /// density with every map f held fixed.
  kFrozenMap,
  /// Exact derivative of each slice's W_p^p: the cost derivative
  /// p|t - f(t)|^{p-1} sign(t - f(t)) integrated against the derivative of
  /// the model slice CDF.
  kPotential,
};

struct SwmConfig {
  double p = 2.0;
  int projections = 20;
  int iters = 2000;
  int quad_points = 256;
  double lr = 0.01;
  /// When positive, the learning rate decays geometrically from `lr` at the
  /// first iteration to `lr_end` at the last. Zero keeps it constant.
  double lr_end = 0.0;
  double gamma = 0.9;
  double kappa = 0.9;
  double eps = 1e-8;
  double eps_var = kDefaultEpsVar;
  /// Lower bound kept on every mixture weight by the simplex projection.
  /// Mean and covariance gradients scale with the weight, so a component at
  /// exactly zero weight could never move again.
  double min_weight = 1e-3;
  std::uint64_t seed = 0;
  GradientRule gradient = GradientRule::kPotential;
  /// Gaussian KDE bandwidth for the data slices; 0 keeps the point masses.
  double kde_bandwidth = 0.0;
  /// Record one trace entry every `trace_every` iterations (and always the last).
  int trace_every = 10;

  /// Throws ArgumentError for any out-of-range field.
  void validate() const;

  /// Learning rate used at iteration `it` of `iters`.
  double learning_rate(int it) const;
};

/// A transport map frozen on a quadrature grid for one direction.
struct SliceTransport {
  Direction theta;
  std::vector<double> nodes;    // uniform t grid
  std::vector<double> weights;  // trapezoid weights
  std::vector<double> target;   // f(t) at each node
};

/// Maps for a set of directions, computed from one model snapshot. Holding
/// them fixed turns the objective into a smooth function of the parameters.
struct FrozenTransport {
  double p = 2.0;
  double eps_var = kDefaultEpsVar;
  std::vector<SliceTransport> slices;
};

/// Build f(., theta_l) = J_y^{-1}(J_x(., theta_l)) on a grid of `quad_points`
/// nodes covering every component's +-6 sigma range and the projected data.
FrozenTransport freeze_transport(const GmmModel& model, const Dataset& data,
                                 const std::vector<Direction>& dirs, double p, int quad_points,
                                 double kde_bandwidth = 0.0);

/// (1/L) sum_l int |f_l(t) - t|^p p_x(t; theta_l) dt for arbitrary parameters.
double frozen_objective(const GmmParams& params, const FrozenTransport& frozen);

/// Gradient of L * frozen_objective (a sum over directions) with every map held fixed.
GmmParams frozen_map_gradients(const GmmParams& params, const FrozenTransport& frozen);

/// Gradient of sum_l W_p^p(slice_l(model), slice_l(data)). The weight entry k
/// is the derivative along the simplex direction e_k - weights, so
/// weights . dweights = 0.
GmmParams potential_gradients(const GmmParams& params, const FrozenTransport& frozen);

/// Discretized sliced objective at `model` for the given directions.
double swm_objective(const GmmModel& model, const Dataset& data, const std::vector<Direction>& dirs,
                     double p, int quad_points);

/// Fixed-map gradients at `model` (see frozen_map_gradients).
GmmParams swm_gradients(const GmmModel& model, const Dataset& data,
                        const std::vector<Direction>& dirs, double p, int quad_points);

/// First and second gradient moments plus velocity, shaped like the model.
struct OptimizerState {
  GmmParams m;
  GmmParams g;
  GmmParams v;
  int iter = 0;

  static OptimizerState zeros_like(const GmmModel& model);
};

/// One RMSProp-with-momentum update of every parameter entry, followed by
/// PSD projection of each covariance and simplex projection of the weights.
/// Throws NumericError for a non-finite gradient.
std::pair<GmmModel, OptimizerState> rmsprop_step(const OptimizerState& state,
                                                 const GmmParams& grads, const SwmConfig& config,
                                                 const GmmModel& model);

struct FitResult {
  GmmModel model;
  FitTrace trace;
};

/// Fit k components by stochastic sliced-Wasserstein descent with fresh
/// directions every iteration. Deterministic in (data, k, config, init).
/// Throws DivergenceError (with the partial trace) on non-finite values.
FitResult fit_swm(const Dataset& data, int k, const SwmConfig& config,
                  const std::optional<GmmModel>& init = std::nullopt);

}  // namespace swgmm
