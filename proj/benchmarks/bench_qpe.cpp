// Copyright 2026 The altqpe Authors
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

#include "altqpe/altqpe.hpp"

namespace {

using namespace altqpe;

HamiltonianPair seeded_pair(Index dim) {
  Rng rng(7);
  return HamiltonianPair::from_hamiltonian(random_hermitian(dim, rng), 1.0);
}

void BM_AlternativeQpe(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HamiltonianPair pair = seeded_pair(2);
  for (auto _ : state) benchmark::DoNotOptimize(alternative_qpe(n, pair.unitary()));
}
BENCHMARK(BM_AlternativeQpe)->DenseRange(1, 7)->Unit(benchmark::kMicrosecond);

void BM_QpeViaHamiltonian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HamiltonianPair pair = seeded_pair(2);
  for (auto _ : state) benchmark::DoNotOptimize(qpe_via_hamiltonian(n, pair));
}
BENCHMARK(BM_QpeViaHamiltonian)->DenseRange(1, 7)->Unit(benchmark::kMicrosecond);

void BM_ComposedQpe(benchmark::State& state) {
  const SplitLayout layout(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const HamiltonianPair pair = seeded_pair(2);
  for (auto _ : state) benchmark::DoNotOptimize(composed_qpe(layout, pair).product);
}
BENCHMARK(BM_ComposedQpe)->Args({1, 1})->Args({2, 2})->Args({3, 3})->Unit(benchmark::kMicrosecond);

void BM_NestedQpe(benchmark::State& state) {
  const SplitLayout layout(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const HamiltonianPair pair = seeded_pair(2);
  for (auto _ : state) benchmark::DoNotOptimize(nested_qpe(layout, pair).product);
}
BENCHMARK(BM_NestedQpe)->Args({1, 1})->Args({2, 2})->Args({3, 3})->Unit(benchmark::kMicrosecond);

void BM_MultiplierDecomposition(benchmark::State& state) {
  const SplitLayout layout(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(qpe_multiplier_decomposition(layout));
}
BENCHMARK(BM_MultiplierDecomposition)->Args({1, 3})->Args({3, 3})->Args({4, 4});

void BM_ShiftAction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ComplexMatrix u = identity(2);
  u(1, 1) = root_of_unity_power(std::size_t{1} << n, 1);
  const PhaseInstance inst(HamiltonianPair::from_unitary(u), basis_vector(2, 1));
  for (auto _ : state) benchmark::DoNotOptimize(qpe_shift_action(n, inst, 0).fidelity);
}
BENCHMARK(BM_ShiftAction)->DenseRange(1, 6)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
