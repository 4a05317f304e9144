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

#include <set>

#include "anlgmap/analogy.hpp"
#include "anlgmap/error.hpp"
#include "anlgmap/rng.hpp"
#include "anlgmap/synth.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "scratch.hpp"

using namespace anlgmap;
using anlgmap::testing::ScratchDir;

namespace {

AnalogyCategory numbered(std::size_t t, const std::string& lang = "xx") {
  std::vector<WordPair> pairs;
  for (std::size_t i = 0; i < t; ++i) pairs.push_back({"a" + std::to_string(i), "b" + std::to_string(i)});
  return AnalogyCategory("C", AnalogyKind::semantic, {{lang, pairs}});
}

// Orthonormal toy space: b - a + c lands exactly on d.
Embedding parallelogram_toy() {
  Matrix m = Matrix::Zero(6, 4);
  m.row(0) << 1, 0, 0, 0;   // a
  m.row(1) << 1, 1, 0, 0;   // b
  m.row(2) << 0, 0, 1, 0;   // c
  m.row(3) << 0, 1, 1, 0;   // d
  m.row(4) << 0, 0, 0, 1;   // filler
  m.row(5) << 1, 0, 1, 0;   // filler
  return Embedding("xx", {"a", "b", "c", "d", "f1", "f2"}, m);
}

}  // namespace

TEST(GenerateQuestions, CountsMatchFormula) {
  for (std::size_t t : {2u, 3u, 5u, 30u}) {
    auto qs = generate_questions(numbered(t), "xx");
    EXPECT_EQ(qs.size(), 8 * t * (t - 1) / 2) << t;
    EXPECT_EQ(expected_question_count(t), qs.size());
  }
  EXPECT_EQ(generate_questions(numbered(30), "xx").size(), 3480u);
}

TEST(GenerateQuestions, EightDistinctOrientationsPerPairOfPairs) {
  auto qs = generate_questions(numbered(2), "xx");
  std::set<std::tuple<std::string, std::string, std::string, std::string>> unique;
  for (const auto& q : qs) {
    unique.insert({q.a, q.b, q.c, q.gold});
    std::set<std::string> words{q.a, q.b, q.c, q.gold};
    EXPECT_EQ(words, (std::set<std::string>{"a0", "b0", "a1", "b1"}));
    bool gold_is_second = q.gold[0] == 'b';
    EXPECT_EQ(q.target_side == PairSide::second, gold_is_second);
  }
  EXPECT_EQ(unique.size(), 8u);
  std::size_t across = 0;
  for (const auto& q : qs) across += q.across_pairs;
  EXPECT_EQ(across, 4u);
}

TEST(GenerateQuestions, RejectsTinyCategory) {
  EXPECT_THROW(generate_questions(numbered(1), "xx"), ValidationError);
  EXPECT_THROW(generate_questions(numbered(3), "yy"), ValidationError);
}

TEST(AnalogyCategory, RejectsBadShapes) {
  std::vector<WordPair> two{{"a", "b"}, {"c", "d"}};
  std::vector<WordPair> one{{"a", "b"}};
  EXPECT_THROW(AnalogyCategory("C", AnalogyKind::semantic, {{"en", two}, {"de", one}}), ValidationError);
  std::vector<WordPair> dup{{"a", "b"}, {"a", "b"}};
  EXPECT_THROW(AnalogyCategory("C", AnalogyKind::semantic, {{"en", dup}}), ValidationError);
  EXPECT_THROW(AnalogyCategory("C", AnalogyKind::semantic, {}), ValidationError);
}

TEST(CategoryFiles, RoundTrip) {
  ScratchDir dir;
  std::vector<WordPair> en{{"paris", "france"}, {"rome", "italy"}};
  std::vector<WordPair> de{{"paris", "frankreich"}, {"rom", "italien"}};
  AnalogyCategory cap("CAP", AnalogyKind::semantic, {{"en", en}, {"de", de}});
  AnalogyCategory plural("PLURAL", AnalogyKind::syntactic, {{"en", {{"cat", "cats"}, {"dog", "dogs"}}}});
  write_analogy_dir(dir.path(), {plural, cap});
  auto corpus = read_analogy_dir(dir.path());
  ASSERT_EQ(corpus.size(), 2u);
  EXPECT_EQ(corpus[0].name(), "CAP");
  EXPECT_EQ(corpus[0].pairs("de"), de);
  EXPECT_EQ(corpus[1].kind(), AnalogyKind::syntactic);
  EXPECT_EQ(find_category(corpus, "PLURAL").pairs("en").size(), 2u);
  EXPECT_THROW(find_category(corpus, "NOPE"), ValidationError);
}

TEST(CategoryFiles, ParseErrorsCarryLine) {
  ScratchDir dir;
  auto path = dir.write("bad.tsv", "#category X semantic\nen\tde\na/b\tc/d\ne/f\n");
  try {
    read_category_file(path);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  EXPECT_THROW(read_category_file(dir.write("h.tsv", "category X semantic\nen\na/b\n")), ParseError);
  EXPECT_THROW(read_category_file(dir.write("k.tsv", "#category X lexical\nen\na/b\n")), ParseError);
  EXPECT_THROW(read_category_file(dir.write("s.tsv", "#category X semantic\nen\nab\n")), ParseError);
}

TEST(Solvers, ExactOffsetToySpace) {
  auto e = parallelogram_toy();
  AnalogySpace space(e);
  AnalogyQuestion q{"a", "b", "c", "d", "T", PairSide::second, false};
  EXPECT_EQ(solve_3cosadd(space, q), "d");
  EXPECT_EQ(solve_3cosmul(space, q), "d");
  EXPECT_EQ(solve_pairdistance(space, q), "d");
}

TEST(Solvers, OovQueryIsSkipped) {
  auto e = parallelogram_toy();
  AnalogySpace space(e);
  AnalogyQuestion q{"a", "b", "zzz", "d", "T", PairSide::second, false};
  EXPECT_FALSE(solve_3cosadd(space, q));
  EXPECT_FALSE(solve_3cosmul(space, q));
  EXPECT_FALSE(solve_pairdistance(space, q));
}

TEST(Solvers, CosMulEpsilonKeepsScoresFinite) {
  Matrix m(5, 2);
  m << 1, 0,   // a
      0, 1,    // b
      0.6, 0.8,  // c
      -1, 0,   // opposite of a: shifted cosine 0
      0.5, 0.5;
  Embedding e("xx", {"a", "b", "c", "anti", "x"}, m);
  AnalogySpace space(e);
  AnalogyQuestion q{"a", "b", "c", "anti", "T", PairSide::second, false};
  // The exact-opposite candidate divides by epsilon alone and wins.
  EXPECT_EQ(solve_3cosmul(space, q), "anti");
}

TEST(Solvers, PairDistanceRejectsDegenerateRelation) {
  auto e = parallelogram_toy();
  AnalogySpace space(e);
  AnalogyQuestion q{"a", "a", "c", "d", "T", PairSide::second, false};
  EXPECT_THROW(solve_pairdistance(space, q), ValidationError);
}

TEST(Solvers, MatchExhaustiveOracleOnRandomSpaces) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto e = fixture::random_embedding(20, 5, seed);
    AnalogySpace space(e);
    auto category = fixture::random_category(e, 4, seed + 100);
    for (const auto& q : generate_questions(category, "xx")) {
      EXPECT_EQ(*solve_3cosadd(space, q), oracle::solve(e, q, SolverKind::cos_add));
      EXPECT_EQ(*solve_3cosmul(space, q), oracle::solve(e, q, SolverKind::cos_mul));
      EXPECT_EQ(*solve_pairdistance(space, q), oracle::solve(e, q, SolverKind::pair_distance));
    }
  }
}

TEST(LRCos, MatchesOracleOn30WordSpace) {
  auto e = fixture::random_embedding(30, 6, 7);
  AnalogySpace space(e);
  auto category = fixture::random_category(e, 5, 7);
  LRCosConfig config;
  config.seed = 7;
  LRCosClassifiers classifiers(space, category, "xx", config);
  for (const auto& q : generate_questions(category, "xx")) {
    const auto& model = classifiers.get(q.target_side, e.find(q.gold));
    auto probability = [&](std::size_t w) { return model.probability(space.unit_rows().row(w)); };
    EXPECT_EQ(*solve_lrcos(space, classifiers, q), oracle::solve(e, q, SolverKind::lrcos, probability));
  }
}

TEST(LRCos, SeparableToySpacePicksGold) {
  // Second-side words cluster on the last axis; gold sits closest to c.
  Matrix m(8, 3);
  m << 1, 0, 0.1,  // a0
      0.9, 0.1, 3,  // b0
      0, 1, 0.1,   // a1
      0.1, 0.9, 3,  // b1
      0.5, 0.5, 0.1,  // a2
      0.5, 0.5, 3,   // b2
      0.2, 1, 0,     // distractor near a1
      1, 0.2, 0;
  Embedding e("xx", {"a0", "b0", "a1", "b1", "a2", "b2", "n1", "n2"}, m);
  AnalogyCategory category("T", AnalogyKind::semantic, {{"xx", {{"a0", "b0"}, {"a1", "b1"}, {"a2", "b2"}}}});
  AnalogySpace space(e);
  LRCosClassifiers classifiers(space, category, "xx", {});
  AnalogyQuestion q{"a0", "b0", "a1", "b1", "T", PairSide::second, false};
  EXPECT_EQ(solve_lrcos(space, classifiers, q), "b1");
}

TEST(LRCos, NeedsTwoTargetSideWords) {
  auto e = fixture::random_embedding(10, 3, 1);
  AnalogyCategory category("T", AnalogyKind::semantic, {{"xx", {{"w0", "w1"}, {"w2", "zz"}}}});
  AnalogySpace space(e);
  LRCosClassifiers classifiers(space, category, "xx", {});
  EXPECT_THROW(classifiers.get(PairSide::second, std::nullopt), ValidationError);
}

TEST(LRCos, DeterministicGivenSeed) {
  SynthSpec spec;
  spec.n_pairs = 6;
  spec.noise_sigma = 0.3;
  spec.seed = 4;
  auto s = gen_analogy_space(spec);
  EvalOptions options;
  options.keep_per_question = true;
  options.lrcos.seed = 5;
  auto first = category_accuracy(s.embedding, s.category, options);
  options.jobs = 3;
  auto second = category_accuracy(s.embedding, s.category, options);
  EXPECT_EQ(first, second);
}

TEST(CategoryAccuracy, ExactParallelogramScoresOne) {
  SynthSpec spec;
  spec.n_pairs = 8;
  spec.seed = 2;
  auto s = gen_analogy_space(spec);
  for (SolverKind solver : {SolverKind::lrcos, SolverKind::cos_add, SolverKind::cos_mul,
                            SolverKind::pair_distance}) {
    EvalOptions options;
    options.solver = solver;
    auto r = category_accuracy(s.embedding, s.category, options);
    EXPECT_EQ(r.accuracy, 1.0) << to_string(solver);
    EXPECT_EQ(r.answered, expected_question_count(8));
  }
}

TEST(CategoryAccuracy, RandomGoldVectorsScoreLow) {
  SynthSpec spec;
  spec.n_pairs = 10;
  spec.seed = 8;
  auto s = gen_analogy_space(spec);
  Matrix m = s.embedding.matrix();
  Rng rng(8);
  for (std::size_t i = 0; i < spec.n_pairs; ++i) {
    auto row = static_cast<Eigen::Index>(*s.embedding.find("b" + std::to_string(i)));
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(row, j) = rng.normal();
  }
  Embedding scrambled("sx", s.embedding.vocab(), m);
  EvalOptions options;
  options.solver = SolverKind::cos_add;
  EXPECT_LT(category_accuracy(scrambled, s.category, options).accuracy, 0.2);
}

TEST(CategoryAccuracy, OovQuestionsAreCountedAsSkipped) {
  auto e = fixture::random_embedding(20, 4, 3);
  AnalogyCategory category("T", AnalogyKind::semantic,
                           {{"xx", {{"w0", "w1"}, {"w2", "w3"}, {"w4", "oov"}}}});
  EvalOptions options;
  options.solver = SolverKind::cos_add;
  auto r = category_accuracy(e, category, options);
  EXPECT_EQ(r.answered + r.skipped_oov, expected_question_count(3));
  EXPECT_EQ(r.answered, 8u);
}

TEST(CategoryAccuracy, NothingAnswerableIsAnError) {
  auto e = fixture::random_embedding(10, 4, 3);
  AnalogyCategory category("T", AnalogyKind::semantic, {{"xx", {{"p", "q"}, {"r", "s"}}}});
  EvalOptions options;
  options.solver = SolverKind::cos_add;
  EXPECT_THROW(category_accuracy(e, category, options), ValidationError);
}

TEST(CandidateSet, ShortlistRestrictsAnswers) {
  auto e = parallelogram_toy();
  AnalogySpace space(e);
  AnalogyQuestion q{"a", "b", "c", "d", "T", PairSide::second, false};
  auto shortlist = CandidateSet::shortlist(e, {"f1", "f2", "missing"});
  auto answer = solve_3cosadd(space, q, shortlist);
  ASSERT_TRUE(answer);
  EXPECT_NE(*answer, "d");
}

TEST(SolverKind, ParsesNames) {
  EXPECT_EQ(parse_solver_kind("3cosadd"), SolverKind::cos_add);
  EXPECT_EQ(parse_solver_kind("pairdist"), SolverKind::pair_distance);
  EXPECT_EQ(to_string(SolverKind::cos_mul), "3cosmul");
  EXPECT_THROW(parse_solver_kind("cosine"), ValidationError);
}
