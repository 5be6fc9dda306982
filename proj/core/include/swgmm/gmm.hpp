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

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "swgmm/dataset.hpp"

namespace swgmm {

/// Floor applied to every covariance eigenvalue and every slice variance.
inline constexpr double kDefaultEpsVar = 1e-6;

/// Unvalidated mixture parameters. Also used as the shape of gradients and
/// optimizer moments, which need not satisfy any model invariant.
struct GmmParams {
  Eigen::VectorXd weights;
  std::vector<Eigen::VectorXd> means;
  std::vector<Eigen::MatrixXd> covariances;

  int k() const noexcept { return static_cast<int>(weights.size()); }
  int dim() const noexcept { return means.empty() ? 0 : static_cast<int>(means.front().size()); }

  /// Same shapes as `like`, every entry zero.
  static GmmParams zeros_like(const GmmParams& like);
  bool all_finite() const;
};

/// A validated Gaussian mixture: weights on the simplex, symmetric
/// covariances with every eigenvalue at or above `eps_var`.
///
/// Immutable after construction. Cholesky factors are cached so density
/// evaluation is cheap.
class GmmModel {
 public:
  /// Throws InvalidModelError when any invariant fails.
  explicit GmmModel(GmmParams params, double eps_var = kDefaultEpsVar);
  GmmModel(Eigen::VectorXd weights, std::vector<Eigen::VectorXd> means,
           std::vector<Eigen::MatrixXd> covariances, double eps_var = kDefaultEpsVar);

  int dim() const noexcept { return params_.dim(); }
  int k() const noexcept { return params_.k(); }
  double eps_var() const noexcept { return eps_var_; }

  const GmmParams& params() const noexcept { return params_; }
  const Eigen::VectorXd& weights() const noexcept { return params_.weights; }
  const std::vector<Eigen::VectorXd>& means() const noexcept { return params_.means; }
  const std::vector<Eigen::MatrixXd>& covariances() const noexcept { return params_.covariances; }

  /// log N_d(x; mu_k, Sigma_k), without the mixture weight.
  double component_log_density(int k, const Eigen::Ref<const Eigen::VectorXd>& x) const;

 private:
  GmmParams params_;
  double eps_var_;
  std::vector<Eigen::LLT<Eigen::MatrixXd>> chol_;
  std::vector<double> log_norm_;  // -d/2 log(2 pi) - 1/2 log det Sigma_k
};

/// Mixture density at x. Throws ArgumentError on dimension mismatch.
double density(const GmmModel& model, const Eigen::Ref<const Eigen::VectorXd>& x);

/// log of `density`, computed with log-sum-exp.
double log_density(const GmmModel& model, const Eigen::Ref<const Eigen::VectorXd>& x);

/// Average negative log-likelihood -(1/N) sum_n log p(y_n).
double nll(const GmmModel& model, const Dataset& data);

/// n i.i.d. draws. Deterministic in (model, n, seed).
Dataset sample(const GmmModel& model, int n, std::uint64_t seed);

/// Same as `sample`, also returning the component index drawn for each row.
Dataset sample(const GmmModel& model, int n, std::uint64_t seed, std::vector<int>* components);

/// Nearest symmetric matrix (Frobenius) with every eigenvalue >= eps_var.
/// Input is symmetrized first; compliant input is returned unchanged.
Eigen::MatrixXd project_psd(const Eigen::Ref<const Eigen::MatrixXd>& m,
                            double eps_var = kDefaultEpsVar);

/// Clip negatives to zero, then rescale to unit sum.
/// Throws DegenerateWeightsError when nothing positive remains.
///
/// With `min_weight` > 0 entries are raised to `min_weight` before rescaling
/// instead, so no component ever reaches exactly zero weight. Requires
/// K * min_weight < 1.
///
/// This is not the Euclidean projection onto the simplex (which subtracts a
/// common threshold before clipping); it only restores feasibility.
Eigen::VectorXd project_simplex(const Eigen::Ref<const Eigen::VectorXd>& w,
                                double min_weight = 0.0);

}  // namespace swgmm
