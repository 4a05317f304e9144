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

#include "anlgmap/linear_map.hpp"
#include "anlgmap/rng.hpp"

namespace {

anlgmap::AlignedMatrixPair random_pair(Eigen::Index rows, Eigen::Index dim) {
  anlgmap::Rng rng(7);
  anlgmap::AlignedMatrixPair pair;
  pair.x.resize(rows, dim);
  pair.y.resize(rows, dim);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      pair.x(i, j) = rng.normal();
      pair.y(i, j) = 0.5 * pair.x(i, j) + rng.normal();
    }
  }
  pair.row_words.resize(static_cast<std::size_t>(rows));
  anlgmap::preprocess(pair);
  return pair;
}

void BM_FitGradientDescent(benchmark::State& state) {
  auto pair = random_pair(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(anlgmap::fit_linear_gd(pair).residual);
}
BENCHMARK(BM_FitGradientDescent)->Args({60, 50})->Args({60, 300})->Args({1000, 300});

void BM_FitClosedForm(benchmark::State& state) {
  auto pair = random_pair(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(anlgmap::fit_linear_closed(pair).residual);
}
BENCHMARK(BM_FitClosedForm)->Args({60, 50})->Args({60, 300})->Args({1000, 300});

}  // namespace
