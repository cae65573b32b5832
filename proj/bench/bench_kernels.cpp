// Copyright 2026 The Entanglemetry Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Compares the OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "entanglemetry/catalog.hpp"
#include "entanglemetry/state.hpp"
#include "entanglemetry/verify.hpp"

namespace em = entanglemetry;

namespace {

em::CampaignConfig bench_config(benchmark::State& state) {
  em::CampaignConfig cfg;
  cfg.ensemble = em::EnsembleSpec::parse("haar4", 7, static_cast<std::size_t>(state.range(0)));
  return cfg;
}

void BM_CampaignParallel(benchmark::State& state) {
  const auto cfg = bench_config(state);
  for (auto _ : state) benchmark::DoNotOptimize(em::run_campaign(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CampaignParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_CampaignSerial(benchmark::State& state) {
  const auto cfg = bench_config(state);
  for (auto _ : state) benchmark::DoNotOptimize(em::reference::run_campaign_serial(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CampaignSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_ReducedDensity(benchmark::State& state) {
  em::SampleRng rng(1);
  const auto psi = em::haar_state(static_cast<int>(state.range(0)), rng);
  const em::QubitSubset keep(0b11);
  for (auto _ : state) benchmark::DoNotOptimize(em::reduced_density(psi, keep));
}
BENCHMARK(BM_ReducedDensity)->DenseRange(4, 8, 2);

void BM_ReducedDensityDense(benchmark::State& state) {
  em::SampleRng rng(1);
  const auto psi = em::haar_state(static_cast<int>(state.range(0)), rng);
  const em::QubitSubset keep(0b11);
  for (auto _ : state) benchmark::DoNotOptimize(em::reference::reduced_density_dense(psi, keep));
}
BENCHMARK(BM_ReducedDensityDense)->DenseRange(4, 8, 2);

}  // namespace

BENCHMARK_MAIN();
