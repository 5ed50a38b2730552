// Copyright 2026 The indecomp Authors
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

#include <vector>

#include "indecomp/criterion.hpp"
#include "indecomp/linalg.hpp"
#include "indecomp/maps.hpp"
#include "indecomp/optim.hpp"
#include "indecomp/random.hpp"

namespace {

using namespace indecomp;

KrausPairMap er4() {
  const std::vector<double> phases{0.0, 0.0};
  return extended_reduction_map(4, antisymmetric_unitary(4, phases, Operator::identity(4)));
}

void BM_HermitianEig(benchmark::State& state) {
  Rng rng(1);
  const Operator h = random_hermitian(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(h));
}
BENCHMARK(BM_HermitianEig)->Arg(4)->Arg(9)->Arg(16)->Arg(36);

void BM_PartialTranspose(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(2);
  const Operator w = random_ginibre(d * d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(partial_transpose(w, BipartiteShape::square(d)));
}
BENCHMARK(BM_PartialTranspose)->Arg(2)->Arg(4)->Arg(6);

void BM_ApplyExtendedReduction(benchmark::State& state) {
  const auto m = er4();
  Rng rng(3);
  const Operator rho = random_state(4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(apply(m, rho));
}
BENCHMARK(BM_ApplyExtendedReduction);

void BM_FindPositiveExpectation(benchmark::State& state) {
  const auto sub = build_subspace(er4());
  Rng rng(4);
  const Operator q = random_psd(16, 16, rng);
  for (auto _ : state) benchmark::DoNotOptimize(find_positive_expectation(sub, q));
}
BENCHMARK(BM_FindPositiveExpectation);

void BM_DecomposeReductionWitness(benchmark::State& state) {
  const Witness w = jamiolkowski_witness(reduction_map(4));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_witness(w));
}
BENCHMARK(BM_DecomposeReductionWitness)->Unit(benchmark::kMillisecond);

void BM_ProjectPptStates(benchmark::State& state) {
  Rng rng(5);
  const Operator x = random_hermitian(16, rng);
  for (auto _ : state) benchmark::DoNotOptimize(project_ppt_states(x, BipartiteShape::square(4), 20));
}
BENCHMARK(BM_ProjectPptStates)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
