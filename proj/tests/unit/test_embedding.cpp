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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "anlgmap/embedding.hpp"
#include "anlgmap/error.hpp"
#include "fixtures.hpp"
#include "scratch.hpp"

using namespace anlgmap;
using anlgmap::testing::ScratchDir;

TEST(LoadTextVectors, ParsesMinimalFile) {
  ScratchDir dir;
  auto path = dir.write("v.vec", "2 3\na 1 0 0\nb 0 1 0\n");
  auto loaded = load_text_vectors(path, "en");
  EXPECT_EQ(loaded.embedding.dim(), 3u);
  EXPECT_EQ(loaded.embedding.vocab(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(loaded.embedding.row(1)(1), 1.0);
  EXPECT_TRUE(loaded.duplicates.empty());
}

TEST(LoadTextVectors, LimitTruncates) {
  ScratchDir dir;
  auto path = dir.write("v.vec", "2 3\na 1 0 0\nb 0 1 0\n");
  auto loaded = load_text_vectors(path, "en", 1);
  EXPECT_EQ(loaded.embedding.vocab(), std::vector<std::string>{"a"});
}

TEST(LoadTextVectors, DuplicateKeepsFirst) {
  ScratchDir dir;
  std::string content = "100 2\n";
  for (int i = 0; i < 100; ++i) {
    std::string token = i == 57 ? "w3" : "w" + std::to_string(i);
    content += token + " " + std::to_string(i) + " 1\n";
  }
  auto loaded = load_text_vectors(dir.write("v.vec", content), "en");
  EXPECT_EQ(loaded.embedding.size(), 99u);
  ASSERT_EQ(loaded.duplicates.size(), 1u);
  EXPECT_EQ(loaded.duplicates[0].token, "w3");
  EXPECT_EQ(loaded.duplicates[0].line, 59u);
  EXPECT_EQ(loaded.embedding.row(*loaded.embedding.find("w3"))(0), 3.0);
}

TEST(LoadTextVectors, ReportsArityLine) {
  ScratchDir dir;
  auto path = dir.write("v.vec", "3 2\na 1 0\nb 0\nc 1 1\n");
  try {
    load_text_vectors(path, "en");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(LoadTextVectors, RejectsBadInput) {
  ScratchDir dir;
  EXPECT_THROW(load_text_vectors(dir.write("empty.vec", ""), "en"), ValidationError);
  EXPECT_THROW(load_text_vectors(dir.write("hdr.vec", "two 3\n"), "en"), ParseError);
  EXPECT_THROW(load_text_vectors(dir.write("nan.vec", "1 2\na nan 1\n"), "en"), ParseError);
  EXPECT_THROW(load_text_vectors(dir.write("inf.vec", "1 2\na 1 inf\n"), "en"), ParseError);
  EXPECT_THROW(load_text_vectors(dir / "missing.vec", "en"), ValidationError);
}

TEST(LoadTextVectors, RoundTripsThroughWriter) {
  ScratchDir dir;
  auto e = fixture::random_embedding(12, 5, 4);
  write_text_vectors(dir / "out.vec", e);
  auto back = load_text_vectors(dir / "out.vec", "xx").embedding;
  EXPECT_EQ(back.vocab(), e.vocab());
  EXPECT_EQ(back.matrix(), e.matrix());
}

TEST(Embedding, LookupMatchesVocabPosition) {
  auto e = fixture::random_embedding(10, 3, 1);
  for (std::size_t i = 0; i < e.size(); ++i) EXPECT_EQ(e.find(e.vocab()[i]), i);
  EXPECT_FALSE(e.find("nope"));
  EXPECT_FALSE(e.lookup("nope"));
}

TEST(Embedding, NormalisesTokensToNfc) {
  Matrix m(1, 2);
  m << 1, 2;
  // "e" + combining acute accent.
  Embedding e("fr", {"e\xCC\x81t\xC3\xA9"}, m);
  EXPECT_TRUE(e.contains("\xC3\xA9t\xC3\xA9"));
  EXPECT_TRUE(e.contains("e\xCC\x81t\xC3\xA9"));
}

TEST(Embedding, RejectsInvalidConstruction) {
  EXPECT_THROW(Embedding("xx", {"a"}, Matrix(1, 0)), ValidationError);
  EXPECT_THROW(Embedding("xx", {"a", "a"}, Matrix::Zero(2, 2)), ValidationError);
  EXPECT_THROW(Embedding("xx", {"a"}, Matrix::Zero(2, 2)), ValidationError);
  Matrix bad = Matrix::Zero(1, 2);
  bad(0, 1) = std::nan("");
  EXPECT_THROW(Embedding("xx", {"a"}, bad), ValidationError);
}

TEST(MeanCenter, Examples) {
  Matrix m(2, 2);
  m << 2, 0, 0, 2;
  Matrix expected(2, 2);
  expected << 1, -1, -1, 1;
  EXPECT_EQ(mean_center(m), expected);
  EXPECT_TRUE(mean_center(expected).isApprox(expected, 1e-12));
  Matrix single(1, 2);
  single << 3, 4;
  EXPECT_EQ(mean_center(single), Matrix::Zero(1, 2));
  EXPECT_THROW(mean_center(Matrix(0, 2)), ValidationError);
}

TEST(MeanCenter, ColumnsSumToZero) {
  Matrix m = fixture::gaussian_matrix(40, 6, 2).array() + 3.0;
  Matrix c = mean_center(m);
  for (Eigen::Index j = 0; j < c.cols(); ++j) EXPECT_NEAR(c.col(j).sum(), 0.0, 1e-9 * 40);
}

TEST(FrobeniusNormalize, Examples) {
  Matrix m(2, 2);
  m << 2, 0, 0, 0;
  Matrix expected(2, 2);
  expected << 1, 0, 0, 0;
  EXPECT_EQ(frobenius_normalize(m), expected);
  EXPECT_EQ(frobenius_normalize(expected), expected);
  Matrix r = frobenius_normalize(fixture::gaussian_matrix(3, 2, 9));
  double sum = 0;
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    for (Eigen::Index j = 0; j < r.cols(); ++j) sum += r(i, j) * r(i, j);
  }
  EXPECT_NEAR(std::sqrt(sum), 1.0, 1e-12);
  EXPECT_THROW(frobenius_normalize(Matrix::Zero(2, 2)), ValidationError);
}

TEST(UnitNormalizeRows, Examples) {
  Matrix m(1, 2);
  m << 3, 4;
  Matrix u = unit_normalize_rows(m);
  EXPECT_NEAR(u(0, 0), 0.6, 1e-15);
  EXPECT_NEAR(u(0, 1), 0.8, 1e-15);
  EXPECT_EQ(unit_normalize_rows(Matrix::Identity(3, 3)), Matrix::Identity(3, 3));
  Matrix r = unit_normalize_rows(fixture::gaussian_matrix(5, 3, 6));
  for (Eigen::Index i = 0; i < r.rows(); ++i) EXPECT_NEAR(r.row(i).norm(), 1.0, 1e-12);
  Matrix z = Matrix::Ones(3, 2);
  z.row(1).setZero();
  try {
    unit_normalize_rows(z);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find('1'), std::string::npos);
  }
}

TEST(EmbeddingCache, ReusesAndInvalidates) {
  ScratchDir dir;
  auto cache_dir = dir / "cache";
  EmbeddingCache cache(cache_dir);
  auto path = dir.write("v.vec", "2 2\na 1 2\nb 3 4\n");
  auto first = cache.load(path, "en");
  ASSERT_TRUE(std::filesystem::exists(cache_dir));
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& entry : std::filesystem::directory_iterator(cache_dir)) ++files;
  EXPECT_EQ(files, 1u);
  auto second = cache.load(path, "en");
  EXPECT_EQ(second.embedding.matrix(), first.embedding.matrix());
  EXPECT_EQ(second.embedding.vocab(), first.embedding.vocab());

  dir.write("v.vec", "2 2\na 5 6\nb 7 8\n");
  auto third = cache.load(path, "en");
  EXPECT_EQ(third.embedding.row(0)(0), 5.0);
}

TEST(EmbeddingCache, DisabledWithoutDirectory) {
  ScratchDir dir;
  auto path = dir.write("v.vec", "1 2\na 1 2\n");
  EmbeddingCache cache(std::nullopt);
  EXPECT_EQ(cache.load(path, "en").embedding.size(), 1u);
}
