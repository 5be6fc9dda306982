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

// Independent reference computations for tests. Nothing here calls into the
// library routines it is used to check.

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace swgmm::testing {

inline double scalar_normal_pdf(double x, double mean, double var) {
  const double r = x - mean;
  return std::exp(-r * r / (2.0 * var)) / std::sqrt(2.0 * std::numbers::pi * var);
}

/// Two-sided Kolmogorov-Smirnov statistic of `samples` against `cdf`.
inline double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

/// CDF of a 1-D Gaussian mixture via boost::math.
inline double mixture_cdf(const std::vector<double>& w, const std::vector<double>& m,
                          const std::vector<double>& sd, double t) {
  double acc = 0.0;
  for (std::size_t c = 0; c < w.size(); ++c) {
    acc += w[c] * boost::math::cdf(boost::math::normal_distribution<double>(m[c], sd[c]), t);
  }
  return acc;
}

/// W_p^p between two 1-D Gaussians: tanh-sinh quadrature of |Q_a(z) - Q_b(z)|^p
/// over (0, 1) with boost::math quantiles.
inline double gaussian_wasserstein_pow(double mean_a, double sd_a, double mean_b, double sd_b,
                                       double p) {
  const boost::math::normal_distribution<double> a(mean_a, sd_a);
  const boost::math::normal_distribution<double> b(mean_b, sd_b);
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto f = [&](double z) {
    return std::pow(std::abs(boost::math::quantile(a, z) - boost::math::quantile(b, z)), p);
  };
  return integrator.integrate(f, 0.0, 1.0);
}

/// Plain 1-D W_p between equal-size samples: sort both, average |x_i - y_i|^p.
inline double sorted_wasserstein(std::vector<double> x, std::vector<double> y, double p) {
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::pow(std::abs(x[i] - y[i]), p);
  return std::pow(acc / x.size(), 1.0 / p);
}

/// Central difference (f(x + h) - f(x - h)) / 2h.
inline double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace swgmm::testing
