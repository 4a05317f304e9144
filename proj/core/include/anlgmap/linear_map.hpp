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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "anlgmap/analogy.hpp"
#include "anlgmap/embedding.hpp"

namespace anlgmap {

struct BilingualDictionary {
  std::string source_lang;
  std::string target_lang;
  std::vector<std::pair<std::string, std::string>> entries;

  // Appends unless the (source, target) entry already exists.
  bool add(std::string source, std::string target);
  BilingualDictionary inverted() const;
};

// MUSE format: one "<source><TAB or SPACE><target>" entry per line, UTF-8.
BilingualDictionary read_muse_dictionary(const std::filesystem::path& path,
                                         std::string source_lang, std::string target_lang);

// Both words of every pair, row by row: (x_a_i, y_a_i), (x_b_i, y_b_i).
BilingualDictionary dictionary_from_category(const AnalogyCategory& category,
                                             const std::string& source_lang,
                                             const std::string& target_lang);

// Row i of x and y hold the two sides of row_words[i].
struct AlignedMatrixPair {
  Matrix x;
  Matrix y;
  std::vector<std::pair<std::string, std::string>> row_words;
  bool preprocessed = false;

  std::size_t rows() const { return static_cast<std::size_t>(x.rows()); }
};

// Mean-centres then Frobenius-normalises both sides in place.
void preprocess(AlignedMatrixPair& pair);

// Keeps dictionary entries whose tokens are both in vocabulary (and both in
// `word_filter` when given), in dictionary order, then preprocesses.
AlignedMatrixPair build_aligned(const Embedding& x, const Embedding& y,
                                const BilingualDictionary& dictionary,
                                const std::unordered_set<std::string>* word_filter = nullptr);

// mapping is d_y x d_x; rows of y are approximated by mapping * (rows of x).
struct LinearFit {
  Matrix mapping;
  double residual = 0.0;
  double s_lmp = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

// || x * mapping^T - y ||_F
double fit_residual(const AlignedMatrixPair& pair, const Matrix& mapping);

struct GDConfig {
  double learning_rate = 0.1;
  std::size_t max_iterations = 10000;
  double relative_tolerance = 1e-10;
  // Nesterov acceleration with restart on loss increase; false gives plain
  // gradient descent.
  bool accelerate = true;
};

// Full-batch gradient descent on ||x M^T - y||_F^2 from the identity
// (leading square block when d_x != d_y). A loss increase restarts the
// momentum, or halves the step when there was none. Iteration stops when the
// relative loss change drops below the tolerance or the budget runs out.
LinearFit fit_linear_gd(const AlignedMatrixPair& pair, const GDConfig& config = {});

// Minimum-norm least-squares solution via complete orthogonal decomposition.
LinearFit fit_linear_closed(const AlignedMatrixPair& pair);

}  // namespace anlgmap
