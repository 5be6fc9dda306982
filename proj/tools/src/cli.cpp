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

#include "swgmm/tools/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "swgmm/datasets.hpp"
#include "swgmm/em.hpp"
#include "swgmm/errors.hpp"
#include "swgmm/gmm.hpp"
#include "swgmm/io.hpp"
#include "swgmm/ot1d.hpp"
#include "swgmm/swm.hpp"
#include "swgmm/tools/compare.hpp"
#include "swgmm/tools/landscape.hpp"

namespace swgmm::tools {
namespace {

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ArgumentError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw ArgumentError("failed writing " + path);
}

template <class Fn>
void write_stream(const std::string& path, Fn&& fn) {
  std::ostringstream s;
  fn(s);
  write_text(path, s.str());
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

struct GenArgs {
  std::string dataset;
  int n = 0;
  std::uint64_t seed = 0;
  double noise = 0.05;
  std::string out;
};

struct FitArgs {
  std::string input;
  int k = 0;
  std::string method;
  std::uint64_t seed = 0;
  std::optional<int> projections;
  std::optional<int> iters;
  std::optional<double> lr;
  std::optional<double> lr_end;
  std::optional<int> quad;
  std::optional<double> p;
  std::optional<double> tol;
  std::string gradient = "potential";
  std::optional<double> min_weight;
  std::string out;
  std::string trace;
};

struct EvalArgs {
  std::string model;
  std::string input;
  std::string metrics = "nll,sw";
  int projections = 500;
  std::uint64_t seed = 0;
  double p = 2.0;
};

struct LandscapeArgs {
  int scenario = 1;
  int n = 5000;
  std::optional<int> grid;
  std::uint64_t seed = 0;
  double p = 2.0;
  std::string out;
};

struct CompareArgs {
  std::string input;
  int k = 0;
  int runs = 0;
  std::uint64_t seed = 0;
  double delta = 0.02;
  std::optional<int> iters;
  std::optional<int> projections;
  std::optional<double> lr;
  std::optional<double> lr_end;
  int eval_projections = 500;
  std::string out;
};

struct SampleArgs {
  std::string model;
  int n = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  if (a.dataset != "ring-square-line") {
    throw ArgumentError("--dataset: unknown dataset '" + a.dataset + "'");
  }
  if (a.n < 3) throw ArgumentError("--n must be at least 3");
  if (!(a.noise >= 0.0)) throw ArgumentError("--noise must be nonnegative");
  const Dataset data = gen_ring_square_line(a.n, a.seed, a.noise);
  write_stream(a.out, [&](std::ostream& s) { write_csv(data, s); });
  return kExitOk;
}

SwmConfig swm_config(const FitArgs& a) {
  SwmConfig c;
  c.seed = a.seed;
  if (a.projections) c.projections = *a.projections;
  if (a.iters) c.iters = *a.iters;
  if (a.lr) c.lr = *a.lr;
  if (a.lr_end) c.lr_end = *a.lr_end;
  if (a.quad) c.quad_points = *a.quad;
  if (a.p) c.p = *a.p;
  if (a.min_weight) c.min_weight = *a.min_weight;
  c.gradient = a.gradient == "frozen-map" ? GradientRule::kFrozenMap : GradientRule::kPotential;
  c.validate();
  return c;
}

EmConfig em_config(const FitArgs& a) {
  EmConfig c;
  c.seed = a.seed;
  if (a.iters) c.iters = *a.iters;
  if (a.tol) c.tol = *a.tol;
  c.validate();
  return c;
}

int cmd_fit(const FitArgs& a, std::ostream& err) {
  const Dataset data = load_csv(a.input);
  if (a.k < 1 || a.k > data.size()) {
    throw ArgumentError("--k must be between 1 and the number of samples (" +
                        std::to_string(data.size()) + ")");
  }
  try {
    const FitResult r = a.method == "em" ? fit_em(data, a.k, em_config(a))
                                         : fit_swm(data, a.k, swm_config(a));
    write_text(a.out, model_to_json(r.model));
    if (!a.trace.empty()) write_stream(a.trace, [&](std::ostream& s) { r.trace.write_csv(s); });
  } catch (const DivergenceError& e) {
    if (!a.trace.empty()) write_stream(a.trace, [&](std::ostream& s) { e.trace().write_csv(s); });
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const std::vector<std::string> metrics = split(a.metrics, ',');
  if (metrics.empty()) throw ArgumentError("--metrics: no metric given");
  for (const std::string& m : metrics) {
    if (m != "nll" && m != "sw") throw ArgumentError("--metrics: unknown metric '" + m + "'");
  }
  if (a.projections < 1) throw ArgumentError("--projections must be positive");
  const GmmModel model = load_model(a.model);
  const Dataset data = load_csv(a.input);
  if (model.dim() != data.dim()) {
    throw ArgumentError("model dimension " + std::to_string(model.dim()) +
                        " does not match data dimension " + std::to_string(data.dim()));
  }
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const std::string& m : metrics) {
    if (m == "nll") {
      j["nll"] = nll(model, data);
    } else {
      SlicedWassersteinOptions o;
      o.p = a.p;
      o.projections = a.projections;
      o.seed = a.seed;
      j["sw"] = sliced_wasserstein(model, data, o);
    }
  }
  out << j.dump() << "\n";
  return kExitOk;
}

int cmd_landscape(const LandscapeArgs& a) {
  LandscapeOptions o;
  o.n = a.n;
  o.seed = a.seed;
  o.p = a.p;
  o.grid = a.grid.value_or(a.scenario == 1 ? 401 : 101);
  if (o.grid < 2) throw ArgumentError("--grid must be at least 2");
  if (a.scenario == 1) {
    const Landscape1 l = landscape_scenario1(o);
    write_stream(a.out, [&](std::ostream& s) { l.write_csv(s); });
  } else {
    const Landscape2 l = landscape_scenario2(o);
    write_stream(a.out, [&](std::ostream& s) { l.write_csv(s); });
  }
  return kExitOk;
}

int cmd_compare(const CompareArgs& a, std::ostream& err) {
  if (a.runs < 1) throw ArgumentError("--runs must be at least 1");
  const Dataset data = load_csv(a.input);
  CompareOptions o;
  o.k = a.k;
  o.runs = a.runs;
  o.seed = a.seed;
  o.delta = a.delta;
  o.eval_projections = a.eval_projections;
  if (a.iters) o.swm.iters = *a.iters;
  if (a.projections) o.swm.projections = *a.projections;
  if (a.lr) o.swm.lr = *a.lr;
  if (a.lr_end) o.swm.lr_end = *a.lr_end;
  const CompareReport report = run_compare(data, o, [&](int done, int total) {
    err << "run " << done << "/" << total << " done\n";
  });
  write_text(a.out, report.to_json());
  return kExitOk;
}

int cmd_sample(const SampleArgs& a) {
  if (a.n < 1) throw ArgumentError("--n must be positive");
  const GmmModel model = load_model(a.model);
  const Dataset data = sample(model, a.n, a.seed);
  write_stream(a.out, [&](std::ostream& s) { write_csv(data, s); });
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian mixture fitting by sliced Wasserstein minimization", "swgmm"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a synthetic dataset as CSV");
  g->add_option("--dataset", gen.dataset, "Dataset name (ring-square-line)")->required();
  g->add_option("--n", gen.n, "Number of points")->required();
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_option("--noise", gen.noise, "Isotropic Gaussian jitter scale");
  g->add_option("--out", gen.out, "Output CSV")->required();

  FitArgs fit;
  auto* f = app.add_subcommand("fit", "Fit a GMM to CSV data");
  f->add_option("--input", fit.input, "Input CSV")->required();
  f->add_option("--k", fit.k, "Number of components")->required();
  f->add_option("--method", fit.method, "swm or em")
      ->required()
      ->check(CLI::IsMember({"swm", "em"}));
  f->add_option("--seed", fit.seed, "Random seed");
  f->add_option("--projections", fit.projections, "Directions per iteration (swm)");
  f->add_option("--iters", fit.iters, "Iterations");
  f->add_option("--lr", fit.lr, "RMSProp learning rate (swm)");
  f->add_option("--lr-end", fit.lr_end, "Final learning rate of a geometric decay (swm)");
  f->add_option("--quad", fit.quad, "Quadrature points per direction (swm)");
  f->add_option("--p", fit.p, "Wasserstein exponent (swm)");
  f->add_option("--tol", fit.tol, "Relative NLL tolerance (em)");
  f->add_option("--gradient", fit.gradient, "potential or frozen-map (swm)")
      ->check(CLI::IsMember({"potential", "frozen-map"}));
  f->add_option("--min-weight", fit.min_weight, "Weight floor kept by the optimizer (swm)");
  f->add_option("--out", fit.out, "Output model JSON")->required();
  f->add_option("--trace", fit.trace, "Output trace CSV");

  EvalArgs ev;
  auto* e = app.add_subcommand("eval", "Score a model against CSV data");
  e->add_option("--model", ev.model, "Model JSON")->required();
  e->add_option("--input", ev.input, "Input CSV")->required();
  e->add_option("--metrics", ev.metrics, "Comma-separated subset of nll,sw");
  e->add_option("--projections", ev.projections, "Directions for sw");
  e->add_option("--seed", ev.seed, "Seed for the sw directions");
  e->add_option("--p", ev.p, "Wasserstein exponent");

  LandscapeArgs land;
  auto* l = app.add_subcommand("landscape", "Scan NLL and Wasserstein energy landscapes");
  l->add_option("--scenario", land.scenario, "1 or 2")->check(CLI::IsMember({1, 2}));
  l->add_option("--n", land.n, "Number of samples");
  l->add_option("--grid", land.grid, "Grid points per axis");
  l->add_option("--seed", land.seed, "Random seed");
  l->add_option("--p", land.p, "Wasserstein exponent");
  l->add_option("--out", land.out, "Output CSV")->required();

  CompareArgs cmp;
  auto* c = app.add_subcommand("compare", "EM versus SWM from shared random initializations");
  c->add_option("--input", cmp.input, "Input CSV")->required();
  c->add_option("--k", cmp.k, "Number of components")->required();
  c->add_option("--runs", cmp.runs, "Number of initializations")->required();
  c->add_option("--seed", cmp.seed, "Random seed");
  c->add_option("--delta", cmp.delta, "Relative NLL gap counted as success");
  c->add_option("--iters", cmp.iters, "SWM iterations");
  c->add_option("--projections", cmp.projections, "SWM directions per iteration");
  c->add_option("--lr", cmp.lr, "SWM learning rate");
  c->add_option("--lr-end", cmp.lr_end, "SWM final learning rate of a geometric decay");
  c->add_option("--eval-projections", cmp.eval_projections, "Directions for the final sw score");
  c->add_option("--out", cmp.out, "Output report JSON")->required();

  SampleArgs smp;
  auto* s = app.add_subcommand("sample", "Draw samples from a model");
  s->add_option("--model", smp.model, "Model JSON")->required();
  s->add_option("--n", smp.n, "Number of samples")->required();
  s->add_option("--seed", smp.seed, "Random seed");
  s->add_option("--out", smp.out, "Output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (g->parsed()) return cmd_gen(gen);
    if (f->parsed()) return cmd_fit(fit, err);
    if (e->parsed()) return cmd_eval(ev, out);
    if (l->parsed()) return cmd_landscape(land);
    if (c->parsed()) return cmd_compare(cmp, err);
    if (s->parsed()) return cmd_sample(smp);
  } catch (const NumericError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitNumeric;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
  return kExitUsage;
}

}  // namespace swgmm::tools
