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

#include <spdlog/spdlog.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>

#include "anlgmap/embedding.hpp"
#include "anlgmap/error.hpp"

namespace anlgmap {

namespace {

// Layout: magic, u64 rows, u64 dim, u64 duplicate count, then each token as
// u32 length + bytes, rows*dim little-endian doubles, and each duplicate as
// token + u64 line. Host byte order; the cache is machine-local.
constexpr char kMagic[8] = {'A', 'N', 'L', 'G', 'E', 'M', 'B', '1'};

template <typename T>
void write_pod(std::ostream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
bool read_pod(std::istream& in, T& value) {
  return static_cast<bool>(in.read(reinterpret_cast<char*>(&value), sizeof(T)));
}

void write_string(std::ostream& out, const std::string& s) {
  write_pod(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

bool read_string(std::istream& in, std::string& s) {
  std::uint32_t size = 0;
  if (!read_pod(in, size)) return false;
  s.resize(size);
  return static_cast<bool>(in.read(s.data(), size));
}

std::optional<LoadedEmbedding> read_cache(const std::filesystem::path& path, std::string language) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[8];
  if (!in.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0) return std::nullopt;
  std::uint64_t rows = 0, dim = 0, dups = 0;
  if (!read_pod(in, rows) || !read_pod(in, dim) || !read_pod(in, dups)) return std::nullopt;
  std::vector<std::string> vocab(rows);
  for (auto& token : vocab) {
    if (!read_string(in, token)) return std::nullopt;
  }
  Matrix matrix(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      if (!read_pod(in, matrix(i, j))) return std::nullopt;
    }
  }
  std::vector<DuplicateToken> duplicates(dups);
  for (auto& dup : duplicates) {
    std::uint64_t line = 0;
    if (!read_string(in, dup.token) || !read_pod(in, line)) return std::nullopt;
    dup.line = line;
  }
  return LoadedEmbedding{Embedding(std::move(language), std::move(vocab), std::move(matrix)),
                         std::move(duplicates)};
}

void write_cache(const std::filesystem::path& path, const LoadedEmbedding& loaded) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    const Embedding& e = loaded.embedding;
    out.write(kMagic, 8);
    write_pod(out, static_cast<std::uint64_t>(e.size()));
    write_pod(out, static_cast<std::uint64_t>(e.dim()));
    write_pod(out, static_cast<std::uint64_t>(loaded.duplicates.size()));
    for (const auto& token : e.vocab()) write_string(out, token);
    for (Eigen::Index i = 0; i < e.matrix().rows(); ++i) {
      for (Eigen::Index j = 0; j < e.matrix().cols(); ++j) write_pod(out, e.matrix()(i, j));
    }
    for (const auto& dup : loaded.duplicates) {
      write_string(out, dup.token);
      write_pod(out, static_cast<std::uint64_t>(dup.line));
    }
    if (!out) return;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) spdlog::warn("cannot store embedding cache {}: {}", path.string(), ec.message());
}

}  // namespace

std::uint64_t file_checksum(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char buffer[1 << 16];
  while (in) {
    in.read(buffer, sizeof buffer);
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(buffer[i]);
      hash *= 0x100000001b3ULL;
    }
  }
  return hash;
}

EmbeddingCache EmbeddingCache::from_environment() {
  const char* dir = std::getenv("ANLGMAP_CACHE");
  if (dir == nullptr || *dir == '\0') return EmbeddingCache(std::nullopt);
  return EmbeddingCache(std::filesystem::path(dir));
}

LoadedEmbedding EmbeddingCache::load(const std::filesystem::path& path, std::string language,
                                     std::optional<std::size_t> limit) const {
  if (!directory_) return load_text_vectors(path, std::move(language), limit);

  char name[64];
  std::snprintf(name, sizeof name, "%016llx-%llu.bin",
                static_cast<unsigned long long>(file_checksum(path)),
                static_cast<unsigned long long>(limit.value_or(0)));
  auto cached = *directory_ / name;
  if (auto hit = read_cache(cached, language)) {
    spdlog::debug("embedding cache hit {}", cached.string());
    return std::move(*hit);
  }
  auto loaded = load_text_vectors(path, std::move(language), limit);
  std::error_code ec;
  std::filesystem::create_directories(*directory_, ec);
  if (!ec) write_cache(cached, loaded);
  return loaded;
}

}  // namespace anlgmap
