// Copyright 2026 The anlgmap Authors.
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

#include "anlgmap/analogy.hpp"
#include "anlgmap/synth.hpp"

namespace {

void BM_CategoryAccuracy(benchmark::State& state) {
  anlgmap::SynthSpec spec;
  spec.n_pairs = static_cast<std::size_t>(state.range(1));
  spec.noise_sigma = 0.1;
  spec.seed = 5;
  auto space = anlgmap::gen_analogy_space(spec);
  anlgmap::EvalOptions options;
  options.solver = static_cast<anlgmap::SolverKind>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(anlgmap::category_accuracy(space.embedding, space.category, options).accuracy);
  }
  state.SetLabel(anlgmap::to_string(options.solver));
}
BENCHMARK(BM_CategoryAccuracy)
    ->ArgsProduct({{0, 1, 2, 3}, {10, 30}})
    ->Unit(benchmark::kMillisecond);

}  // namespace
