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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anlgmap/analogy.hpp"
#include "anlgmap/embedding.hpp"
#include "anlgmap/linear_map.hpp"
#include "anlgmap/transport.hpp"
#include "anlgmap/xanlg.hpp"

namespace anlgmap::fixture {

Matrix gaussian_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed);

// Words w0..w{n-1} with standard normal coordinates.
Embedding random_embedding(std::size_t words, std::size_t dim, std::uint64_t seed,
                           const std::string& language = "xx");

// `pairs` disjoint pairs drawn from the embedding's vocabulary.
AnalogyCategory random_category(const Embedding& embedding, std::size_t pairs, std::uint64_t seed,
                                const std::string& name = "RND");

// Preprocessed pair with y = x * m^T + b exactly.
AlignedMatrixPair affine_pair(std::size_t rows, std::size_t dx, std::size_t dy, std::uint64_t seed);

// Row-aligned sets built from integer combinations of shared generators, so
// every offset equality among the x rows also holds among the y rows.
AlignedMatrixPair lattice_pair(std::size_t generators, std::size_t dx, std::size_t dy,
                               std::uint64_t seed);

struct PairedSet {
  std::vector<Vector> vectors;  // [a_0..a_{k-1}, b_0..b_{k-1}]
  Matching reference;           // (i, k + i)
};

// b_i = a_i + r plus optional noise on the b side.
PairedSet analogy_consistent_set(std::size_t vectors, std::size_t dim, std::uint64_t seed,
                                 double noise = 0.0);

struct BuilderFixture {
  std::vector<MonolingualAnalogySet> sets;
  DictionarySet dictionaries;
};

// en / de / fr sets with `pairs` planted parallel pairs in category `name`.
BuilderFixture planted_builder(const std::vector<std::pair<std::string, std::size_t>>& categories);

}  // namespace anlgmap::fixture
