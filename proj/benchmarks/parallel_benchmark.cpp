// Copyright 2026 The cloudac Authors
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

// Serial reference versus OpenMP kernels for the key-length sweep and the
// adversary trial loop. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <vector>

#include "cloudac/bench.hpp"
#include "cloudac/primitives.hpp"
#include "cloudac/rng.hpp"
#include "cloudac/scenario.hpp"

namespace {

using namespace cloudac;

bench::SweepConfig sweep_config(std::size_t seeds) {
  bench::SweepConfig config;
  config.datasets = {"sample"};
  config.seeds.clear();
  for (std::size_t i = 0; i < seeds; ++i) config.seeds.push_back(i);
  return config;
}

void BM_SweepSerial(benchmark::State& state) {
  auto config = sweep_config(static_cast<std::size_t>(state.range(0)));
  auto inputs = bench::load_sweep_inputs(config);
  for (auto _ : state) benchmark::DoNotOptimize(bench::run_sweep_serial(config, inputs));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 4);
}

void BM_SweepParallel(benchmark::State& state) {
  auto config = sweep_config(static_cast<std::size_t>(state.range(0)));
  auto inputs = bench::load_sweep_inputs(config);
  for (auto _ : state) benchmark::DoNotOptimize(bench::run_sweep_parallel(config, inputs));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 4);
  state.counters["threads"] = omp_get_max_threads();
}

netsim::ScenarioConfig trial_scenario() {
  netsim::ScenarioConfig c;
  c.n_genuine = 4;
  for (AdversaryClass cls : kAllAdversaryClasses) {
    if (cls != AdversaryClass::kNone) c.adversaries.push_back({cls, 1});
  }
  return c;
}

void BM_TrialsSerial(benchmark::State& state) {
  auto c = trial_scenario();
  std::vector<ByteString> payloads = {entities::sample_payload()};
  auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(netsim::run_trials_serial(c, count, 1, payloads));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TrialsParallel(benchmark::State& state) {
  auto c = trial_scenario();
  std::vector<ByteString> payloads = {entities::sample_payload()};
  auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(netsim::run_trials_parallel(c, count, 1, payloads));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_ModReduce(benchmark::State& state) {
  auto width = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  ByteString x = rng.bytes(width), modulus = rng.bytes(width);
  for (auto _ : state) benchmark::DoNotOptimize(mod_reduce(x, modulus));
}

BENCHMARK(BM_SweepSerial)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TrialsSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TrialsParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ModReduce)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
