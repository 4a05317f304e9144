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

#include "anlgmap/rng.hpp"
#include "anlgmap/transport.hpp"

namespace {

void BM_EnumeratePairings(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    anlgmap::for_each_pairing(n, [&](const anlgmap::Matching&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumeratePairings)->DenseRange(4, 12, 2);

void BM_VerifyBestPairing(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto kind = static_cast<anlgmap::CostKind>(state.range(1));
  anlgmap::Rng rng(3);
  anlgmap::Vector r(4);
  for (Eigen::Index j = 0; j < r.size(); ++j) r(j) = rng.normal();
  std::vector<anlgmap::Vector> vectors(n, anlgmap::Vector(4));
  anlgmap::Matching reference;
  for (std::size_t i = 0; i < n / 2; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) vectors[i](j) = rng.normal();
    vectors[n / 2 + i] = vectors[i] + r;
    reference.emplace_back(i, n / 2 + i);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(anlgmap::verify_best_pairing(vectors, reference, kind).is_optimal);
  }
  state.SetLabel(anlgmap::to_string(kind));
}
BENCHMARK(BM_VerifyBestPairing)
    ->ArgsProduct({{6, 8}, {0, 1, 2}})
    ->Unit(benchmark::kMillisecond);

}  // namespace
