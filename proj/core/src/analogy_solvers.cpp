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

#include <algorithm>
#include <cmath>
#include <limits>

#include "anlgmap/analogy.hpp"
#include "anlgmap/error.hpp"
#include "anlgmap/parallel.hpp"
#include "anlgmap/rng.hpp"

namespace anlgmap {

AnalogySpace::AnalogySpace(const Embedding& embedding)
    : embedding_(&embedding), unit_rows_(unit_normalize_rows(embedding.matrix())) {}

CandidateSet CandidateSet::shortlist(const Embedding& embedding,
                                     const std::vector<std::string>& tokens) {
  std::vector<std::size_t> rows;
  for (const auto& token : tokens) {
    if (auto row = embedding.find(token)) rows.push_back(*row);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  CandidateSet set;
  set.indices_ = std::move(rows);
  return set;
}

namespace {

struct QueryRows {
  std::size_t a, b, c;
};

std::optional<QueryRows> query_rows(const AnalogySpace& space, const AnalogyQuestion& q) {
  const auto& e = space.embedding();
  auto a = e.find(q.a);
  auto b = e.find(q.b);
  auto c = e.find(q.c);
  if (!a || !b || !c) return std::nullopt;
  return QueryRows{*a, *b, *c};
}

// Highest score over candidates other than the query rows; strict '>' keeps
// the lowest index on ties.
template <typename Score>
std::optional<std::string> argmax(const AnalogySpace& space, const CandidateSet& candidates,
                                  const QueryRows& rows, Score&& score) {
  double best = -std::numeric_limits<double>::infinity();
  std::optional<std::size_t> best_row;
  candidates.for_each(space.size(), [&](std::size_t w) {
    if (w == rows.a || w == rows.b || w == rows.c) return;
    double s = score(w);
    if (std::isnan(s)) return;
    if (!best_row || s > best) {
      best = s;
      best_row = w;
    }
  });
  if (!best_row) throw ValidationError("no admissible candidate for analogy question");
  return space.embedding().vocab()[*best_row];
}

Vector similarities(const AnalogySpace& space, const Eigen::Ref<const Vector>& direction) {
  return space.unit_rows() * direction;
}

}  // namespace

std::optional<std::string> solve_3cosadd(const AnalogySpace& space, const AnalogyQuestion& question,
                                         const CandidateSet& candidates) {
  auto rows = query_rows(space, question);
  if (!rows) return std::nullopt;
  const Matrix& u = space.unit_rows();
  Vector target = (u.row(rows->b) - u.row(rows->a) + u.row(rows->c)).transpose();
  double norm = target.norm();
  if (norm == 0.0) throw ValidationError("degenerate question: b - a + c is zero");
  Vector sims = similarities(space, target / norm);
  return argmax(space, candidates, *rows, [&](std::size_t w) { return sims(w); });
}

std::optional<std::string> solve_3cosmul(const AnalogySpace& space, const AnalogyQuestion& question,
                                         const CandidateSet& candidates) {
  auto rows = query_rows(space, question);
  if (!rows) return std::nullopt;
  const Matrix& u = space.unit_rows();
  Vector cos_a = similarities(space, u.row(rows->a).transpose());
  Vector cos_b = similarities(space, u.row(rows->b).transpose());
  Vector cos_c = similarities(space, u.row(rows->c).transpose());
  auto shift = [](double cosine) { return (cosine + 1.0) / 2.0; };
  return argmax(space, candidates, *rows, [&](std::size_t w) {
    return shift(cos_b(w)) * shift(cos_c(w)) / (shift(cos_a(w)) + kCosMulEpsilon);
  });
}

std::optional<std::string> solve_pairdistance(const AnalogySpace& space,
                                              const AnalogyQuestion& question,
                                              const CandidateSet& candidates) {
  auto rows = query_rows(space, question);
  if (!rows) return std::nullopt;
  const Matrix& u = space.unit_rows();
  Eigen::RowVectorXd relation = u.row(rows->b) - u.row(rows->a);
  double relation_norm = relation.norm();
  if (relation_norm == 0.0) throw ValidationError("degenerate question: b - a is zero");
  relation /= relation_norm;
  return argmax(space, candidates, *rows, [&](std::size_t w) {
    Eigen::RowVectorXd offset = u.row(w) - u.row(rows->c);
    double norm = offset.norm();
    if (norm == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return offset.dot(relation) / norm;
  });
}

LRCosClassifiers::LRCosClassifiers(const AnalogySpace& space, const AnalogyCategory& category,
                                   std::string language, LRCosConfig config)
    : space_(&space), language_(std::move(language)), config_(config) {
  for (const auto& pair : category.pairs(language_)) {
    if (auto row = space.embedding().find(pair.first)) first_rows_.push_back(*row);
    if (auto row = space.embedding().find(pair.second)) second_rows_.push_back(*row);
  }
  auto dedupe = [](std::vector<std::size_t>& rows) {
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  };
  dedupe(first_rows_);
  dedupe(second_rows_);
}

const LogisticModel& LRCosClassifiers::get(PairSide side, std::optional<std::size_t> held_out) const {
  std::pair<int, std::size_t> key{side == PairSide::first ? 0 : 1,
                                  held_out.value_or(std::numeric_limits<std::size_t>::max())};
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return *it->second;
  }
  // Training is deterministic per key, so a concurrent duplicate is harmless.
  auto model = std::make_shared<const LogisticModel>(train(side, held_out));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = cache_.emplace(key, std::move(model));
  return *it->second;
}

LogisticModel LRCosClassifiers::train(PairSide side, std::optional<std::size_t> held_out) const {
  const auto& class_rows = side == PairSide::first ? first_rows_ : second_rows_;
  if (class_rows.size() < 2) {
    throw ValidationError("LRCos: category has fewer than 2 in-vocabulary words on the target side");
  }
  std::vector<std::size_t> positives;
  for (std::size_t row : class_rows) {
    if (!held_out || row != *held_out) positives.push_back(row);
  }

  std::vector<std::size_t> pool;
  pool.reserve(space_->size());
  for (std::size_t row = 0; row < space_->size(); ++row) {
    if (!std::binary_search(class_rows.begin(), class_rows.end(), row)) pool.push_back(row);
  }
  if (pool.empty()) throw ValidationError("LRCos: no vocabulary left for negative samples");

  std::uint64_t stream = (side == PairSide::first ? 0ULL : 1ULL) << 62;
  stream ^= held_out ? static_cast<std::uint64_t>(*held_out) + 1 : 0;
  Rng rng(Rng::derive(config_.seed, stream));
  std::size_t wanted = std::min(pool.size(), config_.negatives_per_positive * positives.size());
  // Partial Fisher-Yates: the first `wanted` slots are a uniform sample.
  for (std::size_t i = 0; i < wanted; ++i) {
    std::size_t j = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(wanted);
  std::sort(pool.begin(), pool.end());

  const Matrix& u = space_->unit_rows();
  Matrix features(static_cast<Eigen::Index>(positives.size() + pool.size()), u.cols());
  std::vector<int> labels;
  labels.reserve(positives.size() + pool.size());
  Eigen::Index r = 0;
  for (std::size_t row : positives) {
    features.row(r++) = u.row(static_cast<Eigen::Index>(row));
    labels.push_back(1);
  }
  for (std::size_t row : pool) {
    features.row(r++) = u.row(static_cast<Eigen::Index>(row));
    labels.push_back(0);
  }
  return train_logistic(features, labels,
                        {.l2 = config_.l2, .tolerance = config_.tolerance,
                         .max_epochs = config_.max_epochs});
}

std::optional<std::string> solve_lrcos(const AnalogySpace& space,
                                       const LRCosClassifiers& classifiers,
                                       const AnalogyQuestion& question,
                                       const CandidateSet& candidates) {
  auto rows = query_rows(space, question);
  if (!rows) return std::nullopt;
  std::optional<std::size_t> held_out;
  if (classifiers.config().leave_one_out) held_out = space.embedding().find(question.gold);
  const LogisticModel& model = classifiers.get(question.target_side, held_out);

  const Matrix& u = space.unit_rows();
  std::size_t anchor = question.across_pairs ? rows->b : rows->c;
  Vector cos_anchor = similarities(space, u.row(static_cast<Eigen::Index>(anchor)).transpose());
  Vector logits = (u * model.weights).array() + model.bias;
  return argmax(space, candidates, *rows, [&](std::size_t w) {
    double z = logits(static_cast<Eigen::Index>(w));
    double p = z >= 0 ? 1.0 / (1.0 + std::exp(-z)) : std::exp(z) / (1.0 + std::exp(z));
    return p * cos_anchor(static_cast<Eigen::Index>(w));
  });
}

SolverResult category_accuracy(const Embedding& embedding, const AnalogyCategory& category,
                               const EvalOptions& options) {
  AnalogySpace space(embedding);
  return category_accuracy(space, category, options);
}

SolverResult category_accuracy(const AnalogySpace& space, const AnalogyCategory& category,
                               const EvalOptions& options) {
  const std::string& language = space.embedding().language();
  auto questions = generate_questions(category, language);

  std::optional<LRCosClassifiers> classifiers;
  if (options.solver == SolverKind::lrcos) {
    classifiers.emplace(space, category, language, options.lrcos);
  }

  std::vector<std::optional<std::string>> predictions(questions.size());
  // A question whose gold word is out of vocabulary cannot be answered
  // correctly; it is skipped like one with an OOV query word.
  parallel_for(questions.size(), options.jobs, [&](std::size_t i) {
    const auto& q = questions[i];
    if (!space.embedding().contains(q.gold)) return;
    switch (options.solver) {
      case SolverKind::lrcos:
        predictions[i] = solve_lrcos(space, *classifiers, q, options.candidates);
        break;
      case SolverKind::cos_add:
        predictions[i] = solve_3cosadd(space, q, options.candidates);
        break;
      case SolverKind::cos_mul:
        predictions[i] = solve_3cosmul(space, q, options.candidates);
        break;
      case SolverKind::pair_distance:
        predictions[i] = solve_pairdistance(space, q, options.candidates);
        break;
    }
  });

  SolverResult result;
  for (std::size_t i = 0; i < questions.size(); ++i) {
    if (!predictions[i]) {
      ++result.skipped_oov;
      continue;
    }
    ++result.answered;
    bool correct = space.embedding().find(questions[i].gold) == space.embedding().find(*predictions[i]);
    if (correct) ++result.correct;
    if (options.keep_per_question) {
      result.per_question.push_back({questions[i], *predictions[i], correct});
    }
  }
  if (result.answered == 0) {
    throw ValidationError("category " + category.name() + ": no answerable question in " + language);
  }
  result.accuracy = static_cast<double>(result.correct) / static_cast<double>(result.answered);
  return result;
}

}  // namespace anlgmap
