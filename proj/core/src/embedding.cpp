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

#include "anlgmap/embedding.hpp"

#include <spdlog/spdlog.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "anlgmap/error.hpp"
#include "anlgmap/text.hpp"

namespace anlgmap {

Embedding::Embedding(std::string language, std::vector<std::string> vocab, Matrix matrix)
    : language_(std::move(language)), vocab_(std::move(vocab)), matrix_(std::move(matrix)) {
  if (matrix_.cols() == 0) throw ValidationError("embedding dimension must be positive");
  if (static_cast<std::size_t>(matrix_.rows()) != vocab_.size()) {
    throw ValidationError("embedding has " + std::to_string(vocab_.size()) + " tokens but " +
                          std::to_string(matrix_.rows()) + " rows");
  }
  if (!matrix_.allFinite()) throw ValidationError("embedding contains non-finite values");
  index_.reserve(vocab_.size());
  for (std::size_t i = 0; i < vocab_.size(); ++i) {
    vocab_[i] = nfc(vocab_[i]);
    auto [it, inserted] = index_.emplace(vocab_[i], i);
    if (!inserted) throw ValidationError("duplicate token '" + vocab_[i] + "' in embedding");
  }
}

std::optional<std::size_t> Embedding::find(std::string_view token) const {
  auto it = index_.find(nfc(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<VectorView> Embedding::lookup(std::string_view token) const {
  auto index = find(token);
  if (!index) return std::nullopt;
  return VectorView{vocab_[*index], row(*index)};
}

namespace {

std::size_t parse_count(std::string_view field, const std::string& file, std::size_t line,
                        const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(file, line, std::string("malformed header: bad ") + what);
  }
  return value;
}

}  // namespace

LoadedEmbedding load_text_vectors(const std::filesystem::path& path, std::string language,
                                  std::optional<std::size_t> limit) {
  const std::string file = path.string();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open embedding file " + file);
  if (limit && *limit == 0) throw ValidationError("--limit must be positive");

  std::string line;
  if (!std::getline(in, line)) throw ParseError(file, 1, "empty file");
  auto header = split(rstrip(line), ' ');
  if (header.size() != 2) throw ParseError(file, 1, "malformed header: expected '<count> <dim>'");
  std::size_t count = parse_count(header[0], file, 1, "count");
  std::size_t dim = parse_count(header[1], file, 1, "dimension");
  if (dim == 0) throw ParseError(file, 1, "malformed header: dimension must be positive");

  std::size_t wanted = limit ? std::min(count, *limit) : count;
  std::vector<std::string> vocab;
  std::vector<double> values;
  std::vector<DuplicateToken> duplicates;
  std::unordered_map<std::string, std::size_t> seen;
  vocab.reserve(wanted);
  values.reserve(wanted * dim);

  std::size_t line_no = 1;
  for (std::size_t read = 0; read < wanted; ++read) {
    ++line_no;
    if (!std::getline(in, line)) {
      throw ParseError(file, line_no,
                       "expected " + std::to_string(count) + " rows, found " + std::to_string(read));
    }
    auto fields = split(rstrip(line), ' ');
    if (fields.size() != dim + 1) {
      throw ParseError(file, line_no,
                       "row arity mismatch: expected " + std::to_string(dim) + " values, found " +
                           std::to_string(fields.size() - 1));
    }
    std::string token = nfc(fields[0]);
    if (token.empty()) throw ParseError(file, line_no, "empty token");

    std::size_t base = values.size();
    values.resize(base + dim);
    for (std::size_t j = 0; j < dim; ++j) {
      std::string_view field = fields[j + 1];
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError(file, line_no, "cannot parse value '" + std::string(field) + "'");
      }
      if (!std::isfinite(value)) throw ParseError(file, line_no, "non-finite value");
      values[base + j] = value;
    }

    if (seen.contains(token)) {
      values.resize(base);
      duplicates.push_back({token, line_no});
      continue;
    }
    seen.emplace(token, vocab.size());
    vocab.push_back(std::move(token));
  }

  for (const auto& dup : duplicates) {
    spdlog::warn("{}:{}: duplicate token '{}' ignored", file, dup.line, dup.token);
  }

  Matrix matrix(static_cast<Eigen::Index>(vocab.size()), static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      matrix(i, j) = values[static_cast<std::size_t>(i) * dim + static_cast<std::size_t>(j)];
    }
  }
  return {Embedding(std::move(language), std::move(vocab), std::move(matrix)),
          std::move(duplicates)};
}

void write_text_vectors(const std::filesystem::path& path, const Embedding& embedding) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << embedding.size() << ' ' << embedding.dim() << '\n';
  char buffer[64];
  for (std::size_t i = 0; i < embedding.size(); ++i) {
    out << embedding.vocab()[i];
    for (double v : embedding.row(i)) {
      auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, v);
      out << ' ' << std::string_view(buffer, static_cast<std::size_t>(ptr - buffer));
    }
    out << '\n';
  }
}

Matrix mean_center(const Matrix& matrix) {
  if (matrix.size() == 0) throw ValidationError("mean_center: empty matrix");
  return matrix.rowwise() - matrix.colwise().mean();
}

Matrix frobenius_normalize(const Matrix& matrix) {
  double norm = matrix.norm();
  if (matrix.size() == 0 || norm == 0.0) {
    throw ValidationError("frobenius_normalize: matrix has zero Frobenius norm");
  }
  return matrix / norm;
}

Matrix unit_normalize_rows(const Matrix& matrix) {
  Matrix out = matrix;
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    double norm = out.row(i).norm();
    if (norm == 0.0) {
      throw ValidationError("unit_normalize_rows: row " + std::to_string(i) + " is all zero");
    }
    out.row(i) /= norm;
  }
  return out;
}

}  // namespace anlgmap
