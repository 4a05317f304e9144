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

#include <Eigen/Dense>

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace anlgmap {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Read-only view of one embedding row.
struct VectorView {
  std::string_view token;
  Eigen::Ref<const Eigen::RowVectorXd> values;
};

// A monolingual vector space: unique NFC tokens plus one finite row per token.
// Immutable after construction, so it can be shared across threads.
class Embedding {
 public:
  // Throws ValidationError if dim == 0, tokens repeat, shapes disagree or a
  // value is not finite. Tokens are NFC-normalised here.
  Embedding(std::string language, std::vector<std::string> vocab, Matrix matrix);

  const std::string& language() const { return language_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.cols()); }
  std::size_t size() const { return vocab_.size(); }
  const std::vector<std::string>& vocab() const { return vocab_; }
  const Matrix& matrix() const { return matrix_; }

  // Row index of `token` after NFC normalisation, case-sensitive.
  std::optional<std::size_t> find(std::string_view token) const;
  bool contains(std::string_view token) const { return find(token).has_value(); }

  Eigen::Ref<const Eigen::RowVectorXd> row(std::size_t index) const {
    return matrix_.row(static_cast<Eigen::Index>(index));
  }
  std::optional<VectorView> lookup(std::string_view token) const;

 private:
  std::string language_;
  std::vector<std::string> vocab_;
  Matrix matrix_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct DuplicateToken {
  std::string token;
  std::size_t line;  // 1-based line of the dropped repeat
};

struct LoadedEmbedding {
  Embedding embedding;
  std::vector<DuplicateToken> duplicates;
};

// Parses the "<count> <dim>" text vector format. `limit` caps the number of
// data lines read. Duplicate tokens keep their first row and are reported.
LoadedEmbedding load_text_vectors(const std::filesystem::path& path,
                                  std::string language,
                                  std::optional<std::size_t> limit = std::nullopt);

void write_text_vectors(const std::filesystem::path& path, const Embedding& embedding);

// Subtracts the column means. Throws on an empty matrix.
Matrix mean_center(const Matrix& matrix);

// Scales to unit Frobenius norm. Throws on an all-zero matrix.
Matrix frobenius_normalize(const Matrix& matrix);

// Scales every row to unit Euclidean norm. Throws on a zero row, naming it.
Matrix unit_normalize_rows(const Matrix& matrix);

// Loads through an on-disk cache keyed by the file's content checksum.
// With no cache directory this is load_text_vectors.
class EmbeddingCache {
 public:
  explicit EmbeddingCache(std::optional<std::filesystem::path> directory)
      : directory_(std::move(directory)) {}

  // Reads ANLGMAP_CACHE; unset or empty disables caching.
  static EmbeddingCache from_environment();

  LoadedEmbedding load(const std::filesystem::path& path, std::string language,
                       std::optional<std::size_t> limit = std::nullopt) const;

  const std::optional<std::filesystem::path>& directory() const { return directory_; }

 private:
  std::optional<std::filesystem::path> directory_;
};

// FNV-1a 64 over the file bytes.
std::uint64_t file_checksum(const std::filesystem::path& path);

}  // namespace anlgmap
