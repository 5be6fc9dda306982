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

#include <benchmark/benchmark.h>

#include "swgmm/swgmm.hpp"

namespace {

using namespace swgmm;

GmmModel ring_model(int k) {
  return initialize_model(gen_ring_square_line(1500, 1), k, 2);
}

void BM_SlicedWasserstein(benchmark::State& state) {
  const Dataset data = gen_ring_square_line(static_cast<int>(state.range(0)), 3);
  const GmmModel model = ring_model(10);
  SlicedWassersteinOptions o;
  o.projections = 50;
  for (auto _ : state) benchmark::DoNotOptimize(sliced_wasserstein(model, data, o));
  state.SetItemsProcessed(state.iterations() * o.projections);
}
BENCHMARK(BM_SlicedWasserstein)->Arg(1500)->Arg(10000);

void BM_FreezeTransport(benchmark::State& state) {
  const Dataset data = gen_ring_square_line(static_cast<int>(state.range(0)), 3);
  const GmmModel model = ring_model(10);
  const auto dirs = sample_directions(2, 20, 4);
  for (auto _ : state) benchmark::DoNotOptimize(freeze_transport(model, data, dirs, 2.0, 256));
}
BENCHMARK(BM_FreezeTransport)->Arg(1500)->Arg(10000);

void BM_PotentialGradients(benchmark::State& state) {
  const Dataset data = gen_ring_square_line(1500, 3);
  const GmmModel model = ring_model(static_cast<int>(state.range(0)));
  const FrozenTransport frozen = freeze_transport(model, data, sample_directions(2, 20, 4), 2.0, 256);
  for (auto _ : state) benchmark::DoNotOptimize(potential_gradients(model.params(), frozen));
}
BENCHMARK(BM_PotentialGradients)->Arg(2)->Arg(10);

void BM_SwmFit(benchmark::State& state) {
  const Dataset data = gen_ring_square_line(1500, 3);
  SwmConfig cfg;
  cfg.iters = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fit_swm(data, 10, cfg));
  state.SetItemsProcessed(state.iterations() * cfg.iters);
}
BENCHMARK(BM_SwmFit)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_EmFit(benchmark::State& state) {
  const Dataset data = gen_ring_square_line(static_cast<int>(state.range(0)), 3);
  EmConfig cfg;
  cfg.iters = 50;
  cfg.tol = 0.0;
  for (auto _ : state) benchmark::DoNotOptimize(fit_em(data, 10, cfg));
  state.SetItemsProcessed(state.iterations() * cfg.iters);
}
BENCHMARK(BM_EmFit)->Arg(1500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
