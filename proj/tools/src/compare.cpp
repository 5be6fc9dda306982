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

#include "swgmm/tools/compare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "swgmm/errors.hpp"
#include "swgmm/gmm.hpp"
#include "swgmm/init.hpp"
#include "swgmm/ot1d.hpp"
#include "swgmm/rng.hpp"

namespace swgmm::tools {
namespace {

double median(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

RunRecord score(int run, const GmmModel& model, const Dataset& data,
                const SlicedWassersteinOptions& sw) {
  RunRecord r;
  r.run = run;
  r.nll = nll(model, data);
  r.sw = sliced_wasserstein(model, data, sw);
  return r;
}

RunRecord diverged(int run) {
  RunRecord r;
  r.run = run;
  r.nll = std::numeric_limits<double>::infinity();
  r.sw = std::numeric_limits<double>::infinity();
  r.diverged = true;
  return r;
}

MethodSummary summarize(const std::vector<RunRecord>& records, double best, double delta) {
  MethodSummary s;
  std::vector<double> nlls, sws;
  int hits = 0;
  for (const RunRecord& r : records) {
    nlls.push_back(r.nll);
    sws.push_back(r.sw);
    if (!r.diverged && r.nll - best <= delta * std::abs(best)) ++hits;
  }
  s.success_fraction = records.empty() ? 0.0 : static_cast<double>(hits) / records.size();
  s.median_nll = median(nlls);
  s.median_sw = median(sws);
  return s;
}

nlohmann::ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

nlohmann::ordered_json records_json(const std::vector<RunRecord>& records) {
  auto arr = nlohmann::ordered_json::array();
  for (const RunRecord& r : records) {
    arr.push_back({{"run", r.run}, {"nll", number(r.nll)}, {"sw", number(r.sw)},
                   {"diverged", r.diverged}});
  }
  return arr;
}

nlohmann::ordered_json summary_json(const MethodSummary& s) {
  return {{"success_fraction", s.success_fraction},
          {"median_nll", number(s.median_nll)},
          {"median_sw", number(s.median_sw)}};
}

}  // namespace

CompareReport run_compare(const Dataset& data, const CompareOptions& options,
                          const CompareProgress& progress) {
  if (options.runs < 1) throw ArgumentError("--runs must be at least 1");
  if (options.k < 1 || options.k > data.size()) {
    throw ArgumentError("--k must be between 1 and the number of samples");
  }
  if (!(options.delta >= 0.0)) throw ArgumentError("--delta must be nonnegative");
  if (options.eval_projections < 1) throw ArgumentError("evaluation projections must be positive");
  options.swm.validate();
  options.em.validate();

  SlicedWassersteinOptions sw;
  sw.p = options.swm.p;
  sw.projections = options.eval_projections;
  sw.seed = derive_seed(options.seed, 0);

  CompareReport report;
  report.options = options;
  for (int run = 0; run < options.runs; ++run) {
    const std::uint64_t run_seed = derive_seed(options.seed, static_cast<std::uint64_t>(run) + 1);
    const GmmModel init =
        initialize_model(data, options.k, derive_seed(run_seed, 0), options.swm.eps_var);

    SwmConfig swm = options.swm;
    swm.seed = derive_seed(run_seed, 1);
    EmConfig em = options.em;
    em.seed = derive_seed(run_seed, 2);

    try {
      report.swm.push_back(score(run, fit_swm(data, options.k, swm, init).model, data, sw));
    } catch (const NumericError&) {
      report.swm.push_back(diverged(run));
    }
    try {
      report.em.push_back(score(run, fit_em(data, options.k, em, init).model, data, sw));
    } catch (const NumericError&) {
      report.em.push_back(diverged(run));
    }
    if (progress) progress(run + 1, options.runs);
  }

  report.best_nll = std::numeric_limits<double>::infinity();
  for (const auto* records : {&report.swm, &report.em}) {
    for (const RunRecord& r : *records) report.best_nll = std::min(report.best_nll, r.nll);
  }
  report.swm_summary = summarize(report.swm, report.best_nll, options.delta);
  report.em_summary = summarize(report.em, report.best_nll, options.delta);
  return report;
}

std::string CompareReport::to_json() const {
  nlohmann::ordered_json j;
  j["k"] = options.k;
  j["runs"] = options.runs;
  j["seed"] = options.seed;
  j["delta"] = options.delta;
  j["eval_projections"] = options.eval_projections;
  j["best_nll"] = number(best_nll);
  j["records"] = {{"swm", records_json(swm)}, {"em", records_json(em)}};
  j["summary"] = {{"swm", summary_json(swm_summary)}, {"em", summary_json(em_summary)}};
  return j.dump(2) + "\n";
}

}  // namespace swgmm::tools
