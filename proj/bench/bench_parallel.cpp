// Copyright 2026 The aqgates Authors
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

// Serial reference versus OpenMP paths of the two parallel kernels: the chi
// sweep of the Z gate and the quantum-jump clock ensemble.

#include <vector>

#include <benchmark/benchmark.h>

#include "aqg/autonomous_clock.hpp"
#include "aqg/dispersive_zgate.hpp"

using namespace aqg;

namespace {

std::vector<zgate::DispersiveZParams> sweep_points(std::size_t n) {
  std::vector<zgate::DispersiveZParams> pts;
  for (double chi : zgate::ChiSweep{0.0, 30.0, n}.chis(1.0))
    pts.push_back(zgate::DispersiveZParams::on_rule(chi, 1.0));
  return pts;
}

void chi_sweep(benchmark::State& state, Execution exec) {
  const auto pts = sweep_points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zgate::sweep_final_coherence(pts, 0.5, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void clock_ensemble(benchmark::State& state, Execution exec) {
  const auto model = clock::build_clock_model(clock::ClockParams{});
  clock::TickOptions opt;
  opt.start = clock::ClockStart::steady_state;
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(clock::simulate_ensemble(model, 20.0, n, 1, opt, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(chi_sweep, serial, Execution::serial)->Arg(121)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(chi_sweep, parallel, Execution::parallel)->Arg(121)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(clock_ensemble, serial, Execution::serial)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(clock_ensemble, parallel, Execution::parallel)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
