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

#include "fixtures.hpp"

#include <algorithm>

#include "anlgmap/rng.hpp"

namespace anlgmap::fixture {

Matrix gaussian_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Rng rng(seed);
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = rng.normal();
  }
  return m;
}

Embedding random_embedding(std::size_t words, std::size_t dim, std::uint64_t seed,
                           const std::string& language) {
  std::vector<std::string> vocab;
  for (std::size_t i = 0; i < words; ++i) vocab.push_back("w" + std::to_string(i));
  return Embedding(language, std::move(vocab), gaussian_matrix(words, dim, seed));
}

AnalogyCategory random_category(const Embedding& embedding, std::size_t pairs, std::uint64_t seed,
                                const std::string& name) {
  std::vector<std::string> words = embedding.vocab();
  Rng rng(seed);
  rng.shuffle(words);
  std::vector<WordPair> out;
  for (std::size_t i = 0; i < pairs; ++i) out.push_back({words[2 * i], words[2 * i + 1]});
  return AnalogyCategory(name, AnalogyKind::semantic, {{embedding.language(), out}});
}

namespace {

AlignedMatrixPair finish(Matrix x, Matrix y) {
  AlignedMatrixPair pair;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    pair.row_words.emplace_back("x" + std::to_string(i), "y" + std::to_string(i));
  }
  pair.x = std::move(x);
  pair.y = std::move(y);
  preprocess(pair);
  return pair;
}

}  // namespace

AlignedMatrixPair affine_pair(std::size_t rows, std::size_t dx, std::size_t dy, std::uint64_t seed) {
  Matrix x = gaussian_matrix(rows, dx, Rng::derive(seed, 0));
  Matrix m = gaussian_matrix(dy, dx, Rng::derive(seed, 1));
  Matrix b = gaussian_matrix(1, dy, Rng::derive(seed, 2));
  Matrix y = (x * m.transpose()).rowwise() + b.row(0);
  return finish(std::move(x), std::move(y));
}

AlignedMatrixPair lattice_pair(std::size_t generators, std::size_t dx, std::size_t dy,
                               std::uint64_t seed) {
  Matrix gx = gaussian_matrix(generators, dx, Rng::derive(seed, 0));
  Matrix gy = gaussian_matrix(generators, dy, Rng::derive(seed, 1));
  Matrix bx = gaussian_matrix(1, dx, Rng::derive(seed, 2));
  Matrix by = gaussian_matrix(1, dy, Rng::derive(seed, 3));
  // Coefficients in {0, 1, 2}^generators.
  std::size_t count = 1;
  for (std::size_t g = 0; g < generators; ++g) count *= 3;
  Matrix coefficients(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(generators));
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t code = i;
    for (std::size_t g = 0; g < generators; ++g) {
      coefficients(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(g)) =
          static_cast<double>(code % 3);
      code /= 3;
    }
  }
  Matrix x = (coefficients * gx).rowwise() + bx.row(0);
  Matrix y = (coefficients * gy).rowwise() + by.row(0);
  return finish(std::move(x), std::move(y));
}

PairedSet analogy_consistent_set(std::size_t vectors, std::size_t dim, std::uint64_t seed,
                                 double noise) {
  std::size_t k = vectors / 2;
  Rng rng(seed);
  Vector r(static_cast<Eigen::Index>(dim));
  for (Eigen::Index j = 0; j < r.size(); ++j) r(j) = rng.normal();
  PairedSet set;
  std::vector<Vector> a;
  for (std::size_t i = 0; i < k; ++i) {
    Vector v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index j = 0; j < v.size(); ++j) v(j) = rng.normal();
    a.push_back(v);
  }
  set.vectors = a;
  for (std::size_t i = 0; i < k; ++i) {
    Vector b = a[i] + r;
    for (Eigen::Index j = 0; j < b.size(); ++j) b(j) += noise * rng.normal();
    set.vectors.push_back(b);
    set.reference.emplace_back(i, k + i);
  }
  return set;
}

BuilderFixture planted_builder(const std::vector<std::pair<std::string, std::size_t>>& categories) {
  BuilderFixture f;
  MonolingualAnalogySet en{"en", {}}, de{"de", {}}, fr{"fr", {}};
  BilingualDictionary en_de{"en", "de", {}};
  BilingualDictionary fr_en{"fr", "en", {}};
  for (const auto& [name, pairs] : categories) {
    MonolingualCategory ce, cd, cf;
    for (std::size_t i = 0; i < pairs; ++i) {
      std::string stem = name + std::to_string(i);
      ce.pairs.push_back({"en_" + stem + "a", "en_" + stem + "b"});
      cd.pairs.push_back({"de_" + stem + "a", "de_" + stem + "b"});
      cf.pairs.push_back({"fr_" + stem + "a", "fr_" + stem + "b"});
      for (const char* side : {"a", "b"}) {
        en_de.add("en_" + stem + side, "de_" + stem + side);
        fr_en.add("fr_" + stem + side, "en_" + stem + side);
      }
    }
    // Reverse target order so alignment cannot rely on position.
    std::reverse(cd.pairs.begin(), cd.pairs.end());
    en.categories[name] = ce;
    de.categories[name] = cd;
    fr.categories[name] = cf;
  }
  f.sets = {en, de, fr};
  f.dictionaries[{"en", "de"}] = en_de;
  f.dictionaries[{"fr", "en"}] = fr_en;
  return f;
}

}  // namespace anlgmap::fixture
