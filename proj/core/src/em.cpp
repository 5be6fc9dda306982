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

#include "swgmm/em.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "swgmm/errors.hpp"
#include "swgmm/init.hpp"
#include "swgmm/rng.hpp"

namespace swgmm {

void EmConfig::validate() const {
  if (iters < 1) throw ArgumentError("iters must be >= 1");
  if (!(tol >= 0.0)) throw ArgumentError("tol must be >= 0");
  if (!(eps_var > 0.0)) throw ArgumentError("eps_var must be positive");
}

Eigen::MatrixXd responsibilities(const GmmModel& model, const Dataset& data) {
  if (data.dim() != model.dim()) throw ArgumentError("dataset and model dimensions differ");
  const int n = data.size();
  const int k = model.k();
  Eigen::MatrixXd r(n, k);
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd x = data.row(i).transpose();
    double best = -std::numeric_limits<double>::infinity();
    for (int c = 0; c < k; ++c) {
      const double w = model.weights()[c];
      r(i, c) = w > 0.0 ? std::log(w) + model.component_log_density(c, x)
                        : -std::numeric_limits<double>::infinity();
      best = std::max(best, r(i, c));
    }
    double total = 0.0;
    for (int c = 0; c < k; ++c) {
      r(i, c) = std::exp(r(i, c) - best);
      total += r(i, c);
    }
    r.row(i) /= total;
  }
  return r;
}

FitResult fit_em(const Dataset& data, int k, const EmConfig& config,
                 const std::optional<GmmModel>& init) {
  config.validate();
  if (k < 1) throw ArgumentError("number of components must be >= 1");
  if (init && (init->k() != k || init->dim() != data.dim())) {
    throw ArgumentError("initial model does not match k or the data dimension");
  }
  GmmModel model = init ? GmmModel(init->params(), config.eps_var)
                        : initialize_model(data, k, derive_seed(config.seed, 0), config.eps_var);
  Rng reseed = make_rng(derive_seed(config.seed, 0x5eed));

  const int n = data.size();
  const int d = data.dim();
  const auto& y = data.samples();
  const double spread = std::max(data.covariance().trace() / d, config.eps_var);

  FitTrace trace;
  double prev = nll(model, data);
  trace.records.push_back({0, prev, prev});

  for (int it = 1; it <= config.iters; ++it) {
    const Eigen::MatrixXd resp = responsibilities(model, data);
    const Eigen::VectorXd mass = resp.colwise().sum().transpose();

    GmmParams p;
    p.weights.resize(k);
    bool floored = false;
    bool reinit = false;
    for (int c = 0; c < k; ++c) {
      if (mass[c] < 1e-12) {
        std::uniform_int_distribution<int> pick(0, n - 1);
        p.means.emplace_back(y.row(pick(reseed)).transpose());
        p.covariances.emplace_back(spread * Eigen::MatrixXd::Identity(d, d));
        p.weights[c] = 1.0 / n;
        reinit = true;
        continue;
      }
      const Eigen::VectorXd mu = (y.transpose() * resp.col(c)) / mass[c];
      const SampleMatrix centered = y.rowwise() - mu.transpose();
      Eigen::MatrixXd sigma =
          (centered.transpose() * resp.col(c).asDiagonal() * centered) / mass[c];
      sigma = 0.5 * (sigma + sigma.transpose()).eval();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sigma, Eigen::EigenvaluesOnly);
      if (es.eigenvalues().minCoeff() < config.eps_var) {
        sigma = project_psd(sigma, config.eps_var);
        floored = true;
      }
      p.means.push_back(mu);
      p.covariances.push_back(std::move(sigma));
      p.weights[c] = mass[c] / n;
    }
    p.weights = project_simplex(p.weights);
    model = GmmModel(std::move(p), config.eps_var);

    const double cur = nll(model, data);
    if (!std::isfinite(cur)) {
      throw DivergenceError("EM produced a non-finite NLL at iteration " + std::to_string(it),
                            std::move(trace));
    }
    trace.records.push_back({it, cur, cur, floored, reinit});
    if (!floored && !reinit && std::abs(prev - cur) / std::max(1.0, std::abs(prev)) < config.tol) {
      break;
    }
    prev = cur;
  }
  return {std::move(model), std::move(trace)};
}

}  // namespace swgmm
