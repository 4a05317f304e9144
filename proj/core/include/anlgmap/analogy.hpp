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
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "anlgmap/embedding.hpp"
#include "anlgmap/logistic.hpp"

namespace anlgmap {

enum class AnalogyKind { semantic, syntactic };

std::string to_string(AnalogyKind kind);
AnalogyKind parse_analogy_kind(std::string_view text);

struct WordPair {
  std::string first;
  std::string second;

  friend bool operator==(const WordPair&, const WordPair&) = default;
  friend auto operator<=>(const WordPair&, const WordPair&) = default;
};

// One analogy relation with row-aligned pairs per language: index i names the
// same concept pair in every language.
class AnalogyCategory {
 public:
  AnalogyCategory(std::string name, AnalogyKind kind,
                  std::map<std::string, std::vector<WordPair>> pairs_by_language);

  const std::string& name() const { return name_; }
  AnalogyKind kind() const { return kind_; }
  std::size_t size() const { return size_; }
  std::vector<std::string> languages() const;
  bool has_language(const std::string& language) const {
    return pairs_.contains(language);
  }
  // Throws ValidationError for an unknown language.
  const std::vector<WordPair>& pairs(const std::string& language) const;
  const std::map<std::string, std::vector<WordPair>>& pairs_by_language() const { return pairs_; }

 private:
  std::string name_;
  AnalogyKind kind_;
  std::map<std::string, std::vector<WordPair>> pairs_;
  std::size_t size_ = 0;
};

// Category file format:
//   #category <name> <semantic|syntactic>
//   <lang>\t<lang>...
//   <a>/<b>\t<a>/<b>...
AnalogyCategory read_category_file(const std::filesystem::path& path);
void write_category_file(const std::filesystem::path& path, const AnalogyCategory& category);

// Every *.tsv / *.txt category file in `dir`, sorted by category name.
std::vector<AnalogyCategory> read_analogy_dir(const std::filesystem::path& dir);
void write_analogy_dir(const std::filesystem::path& dir, const std::vector<AnalogyCategory>& corpus);

const AnalogyCategory& find_category(const std::vector<AnalogyCategory>& corpus,
                                     const std::string& name);

enum class PairSide { first, second };

struct AnalogyQuestion {
  std::string a;
  std::string b;
  std::string c;
  std::string gold;
  std::string category;
  // Side of the category the gold word belongs to.
  PairSide target_side = PairSide::second;
  // True when a and b come from different pairs (a:b share a side), false when
  // a:b is itself one of the category's pairs.
  bool across_pairs = false;

  friend bool operator==(const AnalogyQuestion&, const AnalogyQuestion&) = default;
};

std::size_t expected_question_count(std::size_t pairs);

// All 8 * C(t, 2) completion questions for the category in `language`: for
// pairs i < j with alpha=a_i, beta=b_i, gamma=a_j, theta=b_j,
//   alpha:beta::gamma:theta    beta:alpha::theta:gamma
//   gamma:alpha::theta:beta    theta:beta::gamma:alpha
//   alpha:gamma::beta:theta    beta:theta::alpha:gamma
//   gamma:theta::alpha:beta    theta:gamma::beta:alpha
// Duplicates and questions whose gold repeats a query word are dropped.
std::vector<AnalogyQuestion> generate_questions(const AnalogyCategory& category,
                                                const std::string& language);

// Embedding rows scaled to unit length; the space every solver scores in.
class AnalogySpace {
 public:
  explicit AnalogySpace(const Embedding& embedding);

  const Embedding& embedding() const { return *embedding_; }
  const Matrix& unit_rows() const { return unit_rows_; }
  std::size_t size() const { return embedding_->size(); }

 private:
  const Embedding* embedding_;
  Matrix unit_rows_;
};

// Which vocabulary rows may be returned as answers. Default: the whole
// vocabulary. Query words are always excluded.
class CandidateSet {
 public:
  CandidateSet() = default;
  static CandidateSet shortlist(const Embedding& embedding, const std::vector<std::string>& tokens);

  bool is_full() const { return !indices_; }
  // Ascending row indices; only meaningful when !is_full().
  const std::vector<std::size_t>& indices() const { return *indices_; }

  template <typename Fn>
  void for_each(std::size_t vocab_size, Fn&& fn) const {
    if (indices_) {
      for (std::size_t i : *indices_) fn(i);
    } else {
      for (std::size_t i = 0; i < vocab_size; ++i) fn(i);
    }
  }

 private:
  std::optional<std::vector<std::size_t>> indices_;
};

enum class SolverKind { lrcos, cos_add, cos_mul, pair_distance };

std::string to_string(SolverKind kind);
SolverKind parse_solver_kind(std::string_view text);

inline constexpr double kCosMulEpsilon = 1e-3;

// Each solver returns the predicted token, or nullopt when a query word is
// out of vocabulary. Ties go to the lowest vocabulary index.
std::optional<std::string> solve_3cosadd(const AnalogySpace& space, const AnalogyQuestion& question,
                                         const CandidateSet& candidates = {});
std::optional<std::string> solve_3cosmul(const AnalogySpace& space, const AnalogyQuestion& question,
                                         const CandidateSet& candidates = {});
// Throws ValidationError("degenerate question") when b - a is the zero vector.
std::optional<std::string> solve_pairdistance(const AnalogySpace& space,
                                              const AnalogyQuestion& question,
                                              const CandidateSet& candidates = {});

struct LRCosConfig {
  double l2 = 1e-3;
  double tolerance = 1e-6;
  std::size_t max_epochs = 1000;
  std::size_t negatives_per_positive = 10;
  // Hold the gold word out of the positive class.
  bool leave_one_out = true;
  std::uint64_t seed = 0;
};

// Membership classifiers for one (space, category, language), trained lazily
// per (target side, held-out word) and then shared read-only.
class LRCosClassifiers {
 public:
  LRCosClassifiers(const AnalogySpace& space, const AnalogyCategory& category,
                   std::string language, LRCosConfig config);

  // Positive class: in-vocabulary words on `side`, minus `held_out` when given.
  // Negatives: up to negatives_per_positive * positives rows drawn uniformly
  // from the rest of the vocabulary (all words on `side` excluded).
  // Throws ValidationError when the category has fewer than 2 words on that
  // side in vocabulary, or nothing remains to train on.
  const LogisticModel& get(PairSide side, std::optional<std::size_t> held_out) const;

  const LRCosConfig& config() const { return config_; }

 private:
  LogisticModel train(PairSide side, std::optional<std::size_t> held_out) const;

  const AnalogySpace* space_;
  std::string language_;
  LRCosConfig config_;
  std::vector<std::size_t> first_rows_;
  std::vector<std::size_t> second_rows_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, std::size_t>, std::shared_ptr<const LogisticModel>> cache_;
};

// score(w) = P(w in target class) * cos(w, anchor), anchor = c when a:b is a
// category pair and b otherwise (a:b::c:d <=> a:c::b:d), so the anchor is
// always the word whose category partner is the answer.
std::optional<std::string> solve_lrcos(const AnalogySpace& space,
                                       const LRCosClassifiers& classifiers,
                                       const AnalogyQuestion& question,
                                       const CandidateSet& candidates = {});

struct QuestionOutcome {
  AnalogyQuestion question;
  std::string predicted;
  bool correct = false;
  friend bool operator==(const QuestionOutcome&, const QuestionOutcome&) = default;
};

struct SolverResult {
  double accuracy = 0.0;
  std::size_t answered = 0;
  std::size_t correct = 0;
  std::size_t skipped_oov = 0;
  std::vector<QuestionOutcome> per_question;

  friend bool operator==(const SolverResult&, const SolverResult&) = default;
};

struct EvalOptions {
  SolverKind solver = SolverKind::lrcos;
  LRCosConfig lrcos;
  CandidateSet candidates;
  bool keep_per_question = false;
  std::size_t jobs = 1;
};

// Accuracy over every generated question answerable in vocabulary; OOV
// questions are skipped, not counted wrong. Throws when none is answerable.
SolverResult category_accuracy(const Embedding& embedding, const AnalogyCategory& category,
                               const EvalOptions& options = {});
SolverResult category_accuracy(const AnalogySpace& space, const AnalogyCategory& category,
                               const EvalOptions& options = {});

}  // namespace anlgmap
