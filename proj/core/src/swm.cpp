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

#include "swgmm/swm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "swgmm/errors.hpp"
#include "swgmm/init.hpp"
#include "swgmm/ot1d.hpp"
#include "swgmm/rng.hpp"

namespace swgmm {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014327;

double normal_pdf(double r, double var) {
  return kInvSqrt2Pi / std::sqrt(var) * std::exp(-0.5 * r * r / var);
}

double normal_cdf(double r, double var) {
  return 0.5 * std::erfc(-r / std::sqrt(2.0 * var));
}

double cost(double u, double p) {
  const double a = std::abs(u);
  return p == 2.0 ? a * a : std::pow(a, p);
}

// d/du |u|^p
double cost_derivative(double u, double p) {
  if (p == 2.0) return 2.0 * u;
  if (u == 0.0) return 0.0;
  return p * std::pow(std::abs(u), p - 1.0) * (u > 0.0 ? 1.0 : -1.0);
}

void check_frozen(const GmmParams& params, const FrozenTransport& frozen) {
  if (frozen.slices.empty()) throw ArgumentError("frozen transport has no directions");
  if (params.k() < 1 || params.dim() != frozen.slices.front().theta.dim()) {
    throw ArgumentError("parameters do not match the frozen transport dimension");
  }
}

}  // namespace

void SwmConfig::validate() const {
  if (!(p >= 1.0) || !std::isfinite(p)) throw ArgumentError("p must be >= 1");
  if (projections < 1) throw ArgumentError("projections must be >= 1");
  if (iters < 1) throw ArgumentError("iters must be >= 1");
  if (quad_points < 2) throw ArgumentError("quad_points must be >= 2");
  if (!(lr > 0.0)) throw ArgumentError("lr must be positive");
  if (!(lr_end >= 0.0)) throw ArgumentError("lr_end must be >= 0");
  if (!(gamma > 0.0 && gamma < 1.0)) throw ArgumentError("gamma must lie in (0, 1)");
  if (!(kappa >= 0.0 && kappa < 1.0)) throw ArgumentError("kappa must lie in [0, 1)");
  if (!(eps > 0.0)) throw ArgumentError("eps must be positive");
  if (!(eps_var > 0.0)) throw ArgumentError("eps_var must be positive");
  if (!(min_weight >= 0.0 && min_weight < 1.0)) throw ArgumentError("min_weight must lie in [0, 1)");
  if (!(kde_bandwidth >= 0.0)) throw ArgumentError("kde_bandwidth must be >= 0");
  if (trace_every < 1) throw ArgumentError("trace_every must be >= 1");
}

double SwmConfig::learning_rate(int it) const {
  if (lr_end <= 0.0 || iters < 2) return lr;
  const double frac = std::clamp(static_cast<double>(it) / (iters - 1), 0.0, 1.0);
  return lr * std::pow(lr_end / lr, frac);
}

FrozenTransport freeze_transport(const GmmModel& model, const Dataset& data,
                                 const std::vector<Direction>& dirs, double p, int quad_points,
                                 double kde_bandwidth) {
  if (!(p >= 1.0)) throw ArgumentError("p must be >= 1");
  if (quad_points < 2) throw ArgumentError("quad_points must be >= 2");
  if (dirs.empty()) throw ArgumentError("need at least one direction");
  if (data.dim() != model.dim()) {
    throw ArgumentError("dataset dimension " + std::to_string(data.dim()) +
                        " does not match model dimension " + std::to_string(model.dim()));
  }

  FrozenTransport frozen{p, model.eps_var(), {}};
  frozen.slices.reserve(dirs.size());
  for (const auto& theta : dirs) {
    const SliceModel xs = slice_model(model, theta);
    SliceData ys = slice_data(data, theta);

    const Eigen::ArrayXd sd = xs.vars.array().sqrt();
    double lo = std::min((xs.means.array() - 6.0 * sd).minCoeff(), ys.min());
    double hi = std::max((xs.means.array() + 6.0 * sd).maxCoeff(), ys.max());
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    }

    const Marginal target = kde_bandwidth > 0.0 ? Marginal{smooth_slice(ys, kde_bandwidth)}
                                                : Marginal{std::move(ys)};
    SliceTransport st{theta, {}, {}, {}};
    st.nodes.resize(quad_points);
    st.weights.assign(quad_points, (hi - lo) / (quad_points - 1));
    st.weights.front() *= 0.5;
    st.weights.back() *= 0.5;
    st.target.resize(quad_points);
    for (int i = 0; i < quad_points; ++i) {
      const double t = lo + (hi - lo) * i / (quad_points - 1);
      st.nodes[i] = t;
      st.target[i] = transport_map(xs, target, t);
    }
    frozen.slices.push_back(std::move(st));
  }
  return frozen;
}

double frozen_objective(const GmmParams& params, const FrozenTransport& frozen) {
  check_frozen(params, frozen);
  double total = 0.0;
  for (const auto& st : frozen.slices) {
    const SliceModel xs = slice_params(params, st.theta, frozen.eps_var);
    double acc = 0.0;
    for (std::size_t i = 0; i < st.nodes.size(); ++i) {
      const double t = st.nodes[i];
      acc += st.weights[i] * cost(st.target[i] - t, frozen.p) * slice_pdf(xs, t);
    }
    total += acc;
  }
  return total / static_cast<double>(frozen.slices.size());
}

GmmParams frozen_map_gradients(const GmmParams& params, const FrozenTransport& frozen) {
  check_frozen(params, frozen);
  GmmParams grad = GmmParams::zeros_like(params);
  const int k = params.k();
  for (const auto& st : frozen.slices) {
    const SliceModel xs = slice_params(params, st.theta, frozen.eps_var);
    const auto& th = st.theta.theta();
    for (int c = 0; c < k; ++c) {
      const double m = xs.means[c];
      const double v = xs.vars[c];
      const double alpha = params.weights[c];
      double a_int = 0.0;
      double mu_int = 0.0;
      double sigma_int = 0.0;
      for (std::size_t i = 0; i < st.nodes.size(); ++i) {
        const double t = st.nodes[i];
        const double r = t - m;
        const double wc = st.weights[i] * cost(st.target[i] - t, frozen.p) * normal_pdf(r, v);
        a_int += wc;
        mu_int += wc * r / v;
        sigma_int += wc / (2.0 * v) * (r * r / v - 1.0);
      }
      grad.weights[c] += a_int;
      grad.means[c] += (alpha * mu_int) * th;
      grad.covariances[c] += (alpha * sigma_int) * (th * th.transpose());
    }
  }
  return grad;
}

GmmParams potential_gradients(const GmmParams& params, const FrozenTransport& frozen) {
  check_frozen(params, frozen);
  GmmParams grad = GmmParams::zeros_like(params);
  const int k = params.k();
  std::vector<double> pdf(k);
  std::vector<double> cdf(k);
  Eigen::VectorXd a_int(k);
  Eigen::VectorXd mu_int(k);
  Eigen::VectorXd sigma_int(k);
  for (const auto& st : frozen.slices) {
    const SliceModel xs = slice_params(params, st.theta, frozen.eps_var);
    const auto& th = st.theta.theta();
    a_int.setZero();
    mu_int.setZero();
    sigma_int.setZero();
    for (std::size_t i = 0; i < st.nodes.size(); ++i) {
      const double t = st.nodes[i];
      const double dc = st.weights[i] * cost_derivative(t - st.target[i], frozen.p);
      if (dc == 0.0) continue;
      double mix_cdf = 0.0;
      for (int c = 0; c < k; ++c) {
        const double r = t - xs.means[c];
        pdf[c] = normal_pdf(r, xs.vars[c]);
        cdf[c] = normal_cdf(r, xs.vars[c]);
        mix_cdf += params.weights[c] * cdf[c];
      }
      for (int c = 0; c < k; ++c) {
        const double r = t - xs.means[c];
        a_int[c] -= dc * (cdf[c] - mix_cdf);
        mu_int[c] += dc * pdf[c];
        sigma_int[c] += dc * pdf[c] * r / (2.0 * xs.vars[c]);
      }
    }
    for (int c = 0; c < k; ++c) {
      const double alpha = params.weights[c];
      grad.weights[c] += a_int[c];
      grad.means[c] += (alpha * mu_int[c]) * th;
      grad.covariances[c] += (alpha * sigma_int[c]) * (th * th.transpose());
    }
  }
  return grad;
}

double swm_objective(const GmmModel& model, const Dataset& data, const std::vector<Direction>& dirs,
                     double p, int quad_points) {
  return frozen_objective(model.params(), freeze_transport(model, data, dirs, p, quad_points));
}

GmmParams swm_gradients(const GmmModel& model, const Dataset& data,
                        const std::vector<Direction>& dirs, double p, int quad_points) {
  return frozen_map_gradients(model.params(), freeze_transport(model, data, dirs, p, quad_points));
}

OptimizerState OptimizerState::zeros_like(const GmmModel& model) {
  const GmmParams z = GmmParams::zeros_like(model.params());
  return OptimizerState{z, z, z, 0};
}

namespace {

using ArrayView = Eigen::Map<Eigen::ArrayXXd>;
using ConstArrayView = Eigen::Map<const Eigen::ArrayXXd>;

void rmsprop_update(ArrayView param, ConstArrayView grad, ArrayView m, ArrayView g, ArrayView v,
                    const SwmConfig& cfg) {
  m = cfg.gamma * m + (1.0 - cfg.gamma) * grad;
  g = cfg.gamma * g + (1.0 - cfg.gamma) * grad.square();
  // g - m^2 is a variance estimate; clamp the roundoff-negative case before adding eps.
  v = cfg.kappa * v - cfg.lr * grad / ((g - m.square()).max(0.0) + cfg.eps).sqrt();
  param += v;
}

void check_shapes(const GmmParams& a, const GmmParams& b, const char* what) {
  bool ok = a.k() == b.k() && a.means.size() == b.means.size() &&
            a.covariances.size() == b.covariances.size();
  for (std::size_t c = 0; ok && c < a.means.size(); ++c) {
    ok = a.means[c].size() == b.means[c].size() &&
         a.covariances[c].rows() == b.covariances[c].rows() &&
         a.covariances[c].cols() == b.covariances[c].cols();
  }
  if (!ok) throw ArgumentError(std::string(what) + " shape does not match the model");
}

}  // namespace

std::pair<GmmModel, OptimizerState> rmsprop_step(const OptimizerState& state,
                                                 const GmmParams& grads, const SwmConfig& config,
                                                 const GmmModel& model) {
  const GmmParams& cur = model.params();
  check_shapes(grads, cur, "gradient");
  check_shapes(state.m, cur, "optimizer state");
  check_shapes(state.g, cur, "optimizer state");
  check_shapes(state.v, cur, "optimizer state");
  if (!grads.all_finite()) {
    throw NumericError("non-finite gradient at iteration " + std::to_string(state.iter));
  }

  OptimizerState next = state;
  GmmParams p = cur;
  const int k = cur.k();

  // Views that present every tensor as a 2-D array so one update routine serves all of them.
  auto as_array = [](auto& x) { return ArrayView(x.data(), x.rows(), x.cols()); };
  auto as_carray = [](const auto& x) { return ConstArrayView(x.data(), x.rows(), x.cols()); };

  rmsprop_update(as_array(p.weights), as_carray(grads.weights), as_array(next.m.weights),
                 as_array(next.g.weights), as_array(next.v.weights), config);
  for (int c = 0; c < k; ++c) {
    rmsprop_update(as_array(p.means[c]), as_carray(grads.means[c]), as_array(next.m.means[c]),
                   as_array(next.g.means[c]), as_array(next.v.means[c]), config);
    rmsprop_update(as_array(p.covariances[c]), as_carray(grads.covariances[c]),
                   as_array(next.m.covariances[c]), as_array(next.g.covariances[c]),
                   as_array(next.v.covariances[c]), config);
  }
  next.iter = state.iter + 1;

  if (!p.all_finite()) {
    throw NumericError("non-finite parameters after update at iteration " +
                       std::to_string(state.iter));
  }
  for (auto& sigma : p.covariances) sigma = project_psd(sigma, config.eps_var);
  p.weights = project_simplex(p.weights, config.min_weight);
  return {GmmModel(std::move(p), config.eps_var), std::move(next)};
}

FitResult fit_swm(const Dataset& data, int k, const SwmConfig& config,
                  const std::optional<GmmModel>& init) {
  config.validate();
  if (k < 1) throw ArgumentError("number of components must be >= 1");
  if (config.min_weight * k >= 1.0) throw ArgumentError("min_weight * k must be < 1");
  if (init && (init->k() != k || init->dim() != data.dim())) {
    throw ArgumentError("initial model does not match k or the data dimension");
  }
  GmmModel model =
      init ? GmmModel(init->params(), config.eps_var)
           : initialize_model(data, k, derive_seed(config.seed, 0), config.eps_var);
  OptimizerState state = OptimizerState::zeros_like(model);
  FitTrace trace;

  const int d = data.dim();
  auto directions = [&](int iteration) {
    return sample_directions(d, config.projections,
                             derive_seed(config.seed, static_cast<std::uint64_t>(iteration) + 1));
  };

  for (int it = 0; it < config.iters; ++it) {
    const auto dirs = directions(it);
    const FrozenTransport frozen =
        freeze_transport(model, data, dirs, config.p, config.quad_points, config.kde_bandwidth);
    const double objective = frozen_objective(model.params(), frozen);
    if (!std::isfinite(objective)) {
      throw DivergenceError("objective became non-finite at iteration " + std::to_string(it),
                            std::move(trace));
    }
    if (it % config.trace_every == 0) {
      trace.records.push_back({it, objective, nll(model, data)});
    }
    const GmmParams grads = config.gradient == GradientRule::kPotential
                                ? potential_gradients(model.params(), frozen)
                                : frozen_map_gradients(model.params(), frozen);
    try {
      SwmConfig step = config;
      step.lr = config.learning_rate(it);
      auto [next_model, next_state] = rmsprop_step(state, grads, step, model);
      model = std::move(next_model);
      state = std::move(next_state);
    } catch (const Error& e) {
      throw DivergenceError(std::string(e.what()) + " (direction seed " +
                                std::to_string(derive_seed(config.seed, it + 1)) + ")",
                            std::move(trace));
    }
  }

  const FrozenTransport frozen = freeze_transport(model, data, directions(config.iters), config.p,
                                                  config.quad_points, config.kde_bandwidth);
  trace.records.push_back({config.iters, frozen_objective(model.params(), frozen), nll(model, data)});
  return {std::move(model), std::move(trace)};
}

}  // namespace swgmm
