// Copyright 2026 The boundent Authors
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

#include "boundent/acin_states.hpp"
#include "boundent/metrics.hpp"
#include "boundent/product_minimizer.hpp"
#include "boundent/spectral.hpp"
#include "boundent/tomography.hpp"
#include "boundent/witness.hpp"

namespace {

using namespace boundent;

const StateParams kParams = StateParams::symmetric(0.346);

void BM_Eigvalsh(benchmark::State& state) {
  const Operator w = witness({kParams, 0.1069});
  for (auto _ : state) benchmark::DoNotOptimize(eigvalsh(w));
}
BENCHMARK(BM_Eigvalsh);

void BM_PptReport(benchmark::State& state) {
  const DensityOperator rho = acin_state(kParams);
  for (auto _ : state) benchmark::DoNotOptimize(is_ppt(rho));
}
BENCHMARK(BM_PptReport);

void BM_Fidelity(benchmark::State& state) {
  const DensityOperator rho = acin_state(kParams);
  const DensityOperator sigma = acin_state(StateParams::symmetric(0.4));
  for (auto _ : state) benchmark::DoNotOptimize(uhlmann_fidelity(rho, sigma));
}
BENCHMARK(BM_Fidelity);

void BM_ProductMinimizer(benchmark::State& state) {
  const Operator w = witness_bar(kParams);
  ProductMinimizerOptions o;
  o.restarts = static_cast<int>(state.range(0));
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(min_over_product_states(w, o));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ProductMinimizer)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Reconstruct(benchmark::State& state) {
  const auto settings = standard_settings();
  const TomographyDataset data = generate_dataset(acin_state(kParams), settings, 1e-3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(data));
}
BENCHMARK(BM_Reconstruct)->Unit(benchmark::kMicrosecond);

void BM_GenerateDataset(benchmark::State& state) {
  const auto settings = standard_settings();
  const DensityOperator rho = acin_state(kParams);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(generate_dataset(rho, settings, 1e-3, ++seed));
}
BENCHMARK(BM_GenerateDataset)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
