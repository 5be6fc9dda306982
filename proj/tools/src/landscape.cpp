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

#include "swgmm/tools/landscape.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "swgmm/errors.hpp"
#include "swgmm/gmm.hpp"
#include "swgmm/io.hpp"
#include "swgmm/ot1d.hpp"
#include "swgmm/slicing.hpp"

namespace swgmm::tools {
namespace {

void validate(const LandscapeOptions& o) {
  if (o.grid < 2) throw ArgumentError("--grid must be at least 2");
  if (o.n < 1) throw ArgumentError("--n must be positive");
  if (!(o.hi > o.lo)) throw ArgumentError("sweep range is empty");
  if (!(o.p >= 1.0)) throw ArgumentError("p must be >= 1");
}

std::vector<double> linspace(double lo, double hi, int g) {
  std::vector<double> xs(g);
  for (int i = 0; i < g; ++i) xs[i] = lo + (hi - lo) * i / (g - 1);
  return xs;
}

GmmModel line_model(const Eigen::VectorXd& weights, const std::vector<double>& means) {
  std::vector<Eigen::VectorXd> mu;
  std::vector<Eigen::MatrixXd> cov;
  for (double m : means) {
    mu.push_back(Eigen::VectorXd::Constant(1, m));
    cov.push_back(Eigen::MatrixXd::Identity(1, 1));
  }
  return GmmModel(weights, std::move(mu), std::move(cov));
}

SliceModel as_slice(const GmmModel& model) {
  return slice_model(model, Direction(Eigen::VectorXd::Ones(1)));
}

double wm_value(const GmmModel& model, const QuantileGrid& data_grid, const LandscapeOptions& o) {
  const QuantileGrid mg = quantile_grid(as_slice(model), o.quantile_points);
  return std::pow(wasserstein_1d(mg, data_grid, o.p), o.p);
}

}  // namespace

Landscape1 landscape_scenario1(const LandscapeOptions& options) {
  validate(options);
  const GmmModel truth = line_model(Eigen::VectorXd::Ones(1), {0.0});
  const Dataset data = sample(truth, options.n, options.seed);
  const QuantileGrid data_grid =
      quantile_grid(slice_data(data, Direction(Eigen::VectorXd::Ones(1))), options.quantile_points);

  Landscape1 out;
  out.mu = linspace(options.lo, options.hi, options.grid);
  for (double m : out.mu) {
    const GmmModel model = line_model(Eigen::VectorXd::Ones(1), {m});
    out.nll.push_back(nll(model, data));
    out.wm.push_back(wm_value(model, data_grid, options));
  }
  return out;
}

Landscape2 landscape_scenario2(const LandscapeOptions& options) {
  validate(options);
  const Eigen::VectorXd half = Eigen::VectorXd::Constant(2, 0.5);
  const GmmModel truth = line_model(half, {-4.0, 4.0});
  const Dataset data = sample(truth, options.n, options.seed);
  const QuantileGrid data_grid =
      quantile_grid(slice_data(data, Direction(Eigen::VectorXd::Ones(1))), options.quantile_points);

  Landscape2 out;
  out.axis = linspace(options.lo, options.hi, options.grid);
  const int g = options.grid;
  out.nll.resize(g, g);
  out.wm.resize(g, g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      if (j < i) {
        // The pair is exchangeable: (mu1, mu2) and (mu2, mu1) are the same mixture.
        out.nll(i, j) = out.nll(j, i);
        out.wm(i, j) = out.wm(j, i);
        continue;
      }
      const GmmModel model = line_model(half, {out.axis[i], out.axis[j]});
      out.nll(i, j) = nll(model, data);
      out.wm(i, j) = wm_value(model, data_grid, options);
    }
  }
  return out;
}

void Landscape1::write_csv(std::ostream& out) const {
  out << "mu,nll,wm\n";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    out << format_double(mu[i]) << ',' << format_double(nll[i]) << ',' << format_double(wm[i])
        << '\n';
  }
}

void Landscape2::write_csv(std::ostream& out) const {
  out << "mu1,mu2,nll,wm\n";
  const int g = static_cast<int>(axis.size());
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      out << format_double(axis[i]) << ',' << format_double(axis[j]) << ','
          << format_double(nll(i, j)) << ',' << format_double(wm(i, j)) << '\n';
    }
  }
}

}  // namespace swgmm::tools
