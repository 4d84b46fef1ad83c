// Copyright 2026 The hyperpure Authors
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

#include "hyperpure/noise.hpp"
#include "hyperpure/optics.hpp"
#include "hyperpure/purify.hpp"
#include "hyperpure/qstate.hpp"
#include "hyperpure/recurrence.hpp"
#include "hyperpure/tomography.hpp"

namespace hyperpure {
namespace {

void BM_PurifyPipeline(benchmark::State& state) {
  const BellDiagonal w(0.3, 0.7 / 3, 0.7 / 3, 0.7 / 3);
  const DensityMatrix pol = bell_diagonal_to_density(w);
  const DensityMatrix spat = spatial_state_from_fidelity(0.990);
  for (auto _ : state) {
    const PurifyReport report =
        purify(HyperState::product(pol, spat), CircuitPreset::Fig2c);
    benchmark::DoNotOptimize(report.aggregate_fidelity);
  }
}
BENCHMARK(BM_PurifyPipeline);

void BM_ApplyLocalMaps(benchmark::State& state) {
  const DensityMatrix pol = bell_diagonal_to_density(BellDiagonal(0.4, 0.3, 0.2, 0.1));
  const DensityMatrix phi = DensityMatrix::pure(bell_state(BellKind::PhiPlus));
  const ComplexMatrix rho = HyperState::product(pol, phi).full().matrix();
  const Circuit circuit = purification_circuit(CircuitPreset::Fig2c);
  const ComplexMatrix map_a = compose(circuit, Photon::A);
  const ComplexMatrix map_b = compose(circuit, Photon::B);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_local_maps(rho, map_a, map_b));
  }
}
BENCHMARK(BM_ApplyLocalMaps);

void BM_BbpsswRound(benchmark::State& state) {
  const BellDiagonal w(0.8, 0.2 / 3, 0.2 / 3, 0.2 / 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bbpssw_round(w).output.f1());
  }
}
BENCHMARK(BM_BbpsswRound);

void BM_Reconstruct(benchmark::State& state) {
  const DensityMatrix rho =
      bell_diagonal_to_density(BellDiagonal(0.3, 0.7 / 3, 0.7 / 3, 0.7 / 3));
  const auto exps = pauli_expectations(rho);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct(exps).fidelity_vs_target);
  }
}
BENCHMARK(BM_Reconstruct);

void BM_SampleCounts(benchmark::State& state) {
  const DensityMatrix rho =
      bell_diagonal_to_density(BellDiagonal(0.3, 0.7 / 3, 0.7 / 3, 0.7 / 3));
  const std::uint64_t shots = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sample_counts(rho, {PauliOp::Z, PauliOp::X}, shots, seed++).counts[0]);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(shots));
}
BENCHMARK(BM_SampleCounts)->Arg(1000)->Arg(100000);

void BM_ChannelApplication(benchmark::State& state) {
  const DensityMatrix rho = DensityMatrix::pure(bell_state(BellKind::PhiPlus));
  const PauliChannel ch = white_channel(0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_channel(rho, ch).matrix()(0, 0));
  }
}
BENCHMARK(BM_ChannelApplication);

}  // namespace
}  // namespace hyperpure

BENCHMARK_MAIN();
