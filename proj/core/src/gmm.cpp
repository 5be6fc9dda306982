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

#include "swgmm/gmm.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <utility>

#include "swgmm/errors.hpp"
#include "swgmm/rng.hpp"

namespace swgmm {

namespace {

constexpr double kSimplexTol = 1e-9;
constexpr double kSymmetryTol = 1e-9;

void validate(const GmmParams& p, double eps_var) {
  if (!(eps_var > 0.0)) throw InvalidModelError("eps_var must be positive");
  const int k = p.k();
  if (k < 1) throw InvalidModelError("model needs at least one component");
  if (static_cast<int>(p.means.size()) != k || static_cast<int>(p.covariances.size()) != k) {
    throw InvalidModelError("weights, means and covariances disagree on the number of components");
  }
  const int d = p.dim();
  if (d < 1) throw InvalidModelError("model dimension must be >= 1");
  if (!p.all_finite()) throw InvalidModelError("model parameters must be finite");

  if ((p.weights.array() < 0.0).any()) throw InvalidModelError("mixture weights must be >= 0");
  if (std::abs(p.weights.sum() - 1.0) > kSimplexTol) {
    throw InvalidModelError("mixture weights must sum to 1");
  }
  for (int c = 0; c < k; ++c) {
    const auto& mu = p.means[c];
    const auto& sigma = p.covariances[c];
    if (mu.size() != d || sigma.rows() != d || sigma.cols() != d) {
      throw InvalidModelError("component " + std::to_string(c) + " has inconsistent dimension");
    }
    const double scale = std::max(1.0, sigma.cwiseAbs().maxCoeff());
    if ((sigma - sigma.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol * scale) {
      throw InvalidModelError("covariance " + std::to_string(c) + " is not symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sigma, Eigen::EigenvaluesOnly);
    // Reconstruction after eigenvalue clipping lands within roundoff of the floor.
    if (es.eigenvalues().minCoeff() < eps_var - 1e-12 * scale) {
      throw InvalidModelError("covariance " + std::to_string(c) +
                              " has an eigenvalue below the floor eps_var");
    }
  }
}

}  // namespace

GmmParams GmmParams::zeros_like(const GmmParams& like) {
  GmmParams z;
  z.weights = Eigen::VectorXd::Zero(like.weights.size());
  for (const auto& m : like.means) z.means.push_back(Eigen::VectorXd::Zero(m.size()));
  for (const auto& s : like.covariances) {
    z.covariances.push_back(Eigen::MatrixXd::Zero(s.rows(), s.cols()));
  }
  return z;
}

bool GmmParams::all_finite() const {
  if (!weights.allFinite()) return false;
  for (const auto& m : means) {
    if (!m.allFinite()) return false;
  }
  for (const auto& s : covariances) {
    if (!s.allFinite()) return false;
  }
  return true;
}

GmmModel::GmmModel(GmmParams params, double eps_var)
    : params_(std::move(params)), eps_var_(eps_var) {
  validate(params_, eps_var_);
  const int d = dim();
  for (auto& sigma : params_.covariances) {
    sigma = 0.5 * (sigma + sigma.transpose()).eval();
    Eigen::LLT<Eigen::MatrixXd> llt(sigma);
    if (llt.info() != Eigen::Success) {
      sigma = project_psd(sigma, eps_var_);
      llt.compute(sigma);
      if (llt.info() != Eigen::Success) {
        throw InvalidModelError("covariance is not positive definite");
      }
    }
    const Eigen::VectorXd diag = llt.matrixL().toDenseMatrix().diagonal();
    const double log_det = 2.0 * diag.array().log().sum();
    log_norm_.push_back(-0.5 * d * std::log(2.0 * std::numbers::pi) - 0.5 * log_det);
    chol_.push_back(std::move(llt));
  }
}

GmmModel::GmmModel(Eigen::VectorXd weights, std::vector<Eigen::VectorXd> means,
                   std::vector<Eigen::MatrixXd> covariances, double eps_var)
    : GmmModel(GmmParams{std::move(weights), std::move(means), std::move(covariances)}, eps_var) {}

double GmmModel::component_log_density(int k, const Eigen::Ref<const Eigen::VectorXd>& x) const {
  const Eigen::VectorXd z = chol_[k].matrixL().solve(x - params_.means[k]);
  return log_norm_[k] - 0.5 * z.squaredNorm();
}

double log_density(const GmmModel& model, const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (x.size() != model.dim()) {
    throw ArgumentError("point has dimension " + std::to_string(x.size()) + ", model has " +
                        std::to_string(model.dim()));
  }
  const int k = model.k();
  double best = -std::numeric_limits<double>::infinity();
  std::vector<double> terms(k);
  for (int c = 0; c < k; ++c) {
    const double w = model.weights()[c];
    terms[c] = w > 0.0 ? std::log(w) + model.component_log_density(c, x)
                       : -std::numeric_limits<double>::infinity();
    best = std::max(best, terms[c]);
  }
  if (!std::isfinite(best)) return best;
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - best);
  return best + std::log(acc);
}

double density(const GmmModel& model, const Eigen::Ref<const Eigen::VectorXd>& x) {
  return std::exp(log_density(model, x));
}

double nll(const GmmModel& model, const Dataset& data) {
  if (data.dim() != model.dim()) {
    throw ArgumentError("dataset dimension " + std::to_string(data.dim()) +
                        " does not match model dimension " + std::to_string(model.dim()));
  }
  double acc = 0.0;
  for (int n = 0; n < data.size(); ++n) {
    acc += log_density(model, data.row(n).transpose());
  }
  return -acc / data.size();
}

Dataset sample(const GmmModel& model, int n, std::uint64_t seed, std::vector<int>* components) {
  if (n < 1) throw ArgumentError("sample count must be >= 1");
  Rng rng = make_rng(seed);
  std::discrete_distribution<int> pick(model.weights().data(),
                                       model.weights().data() + model.k());
  std::normal_distribution<double> normal;

  std::vector<Eigen::MatrixXd> factors;
  for (const auto& sigma : model.covariances()) {
    // Eigen factor so that near-singular covariances still sample correctly.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sigma);
    factors.push_back(es.eigenvectors() *
                      es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal());
  }

  const int d = model.dim();
  SampleMatrix out(n, d);
  Eigen::VectorXd z(d);
  if (components) components->assign(n, 0);
  for (int i = 0; i < n; ++i) {
    const int c = pick(rng);
    for (int j = 0; j < d; ++j) z[j] = normal(rng);
    out.row(i) = (model.means()[c] + factors[c] * z).transpose();
    if (components) (*components)[i] = c;
  }
  return Dataset(std::move(out), "gmm-samples");
}

Dataset sample(const GmmModel& model, int n, std::uint64_t seed) {
  return sample(model, n, seed, nullptr);
}

Eigen::MatrixXd project_psd(const Eigen::Ref<const Eigen::MatrixXd>& m, double eps_var) {
  if (m.rows() != m.cols()) throw ArgumentError("project_psd needs a square matrix");
  if (!m.allFinite()) throw ArgumentError("project_psd input has non-finite entries");
  if (!(eps_var > 0.0)) throw ArgumentError("eps_var must be positive");
  const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  if (es.eigenvalues().minCoeff() >= eps_var) return sym;
  const Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(eps_var);
  Eigen::MatrixXd out = es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().transpose();
  return 0.5 * (out + out.transpose());
}

Eigen::VectorXd project_simplex(const Eigen::Ref<const Eigen::VectorXd>& w, double min_weight) {
  if (w.size() < 1) throw ArgumentError("project_simplex needs at least one weight");
  if (!w.allFinite()) throw ArgumentError("project_simplex input has non-finite entries");
  if (!(min_weight >= 0.0) || min_weight * w.size() >= 1.0) {
    throw ArgumentError("min_weight must satisfy 0 <= K * min_weight < 1");
  }
  const Eigen::VectorXd clipped = w.cwiseMax(0.0);
  if (!(clipped.sum() > 0.0)) throw DegenerateWeightsError("all mixture weights are <= 0");
  if (min_weight == 0.0) return clipped / clipped.sum();
  Eigen::VectorXd out = w.cwiseMax(min_weight);
  return out / out.sum();
}

}  // namespace swgmm
