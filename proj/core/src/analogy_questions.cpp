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

#include <set>
#include <tuple>

#include "anlgmap/analogy.hpp"
#include "anlgmap/error.hpp"

namespace anlgmap {

std::size_t expected_question_count(std::size_t pairs) {
  return pairs < 2 ? 0 : 8 * (pairs * (pairs - 1) / 2);
}

std::vector<AnalogyQuestion> generate_questions(const AnalogyCategory& category,
                                                const std::string& language) {
  const auto& pairs = category.pairs(language);
  if (pairs.size() < 2) {
    throw ValidationError("category " + category.name() + " needs at least 2 pairs in " + language);
  }

  std::vector<AnalogyQuestion> questions;
  questions.reserve(expected_question_count(pairs.size()));
  std::set<std::tuple<std::string, std::string, std::string, std::string>> seen;
  auto add = [&](const std::string& a, const std::string& b, const std::string& c,
                 const std::string& gold, PairSide side, bool across) {
    if (gold == a || gold == b || gold == c) return;
    if (!seen.emplace(a, b, c, gold).second) return;
    questions.push_back({a, b, c, gold, category.name(), side, across});
  };

  constexpr auto kFirst = PairSide::first;
  constexpr auto kSecond = PairSide::second;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const std::string& alpha = pairs[i].first;
      const std::string& beta = pairs[i].second;
      const std::string& gamma = pairs[j].first;
      const std::string& theta = pairs[j].second;
      add(alpha, beta, gamma, theta, kSecond, false);
      add(beta, alpha, theta, gamma, kFirst, false);
      add(gamma, alpha, theta, beta, kSecond, true);
      add(theta, beta, gamma, alpha, kFirst, true);
      add(alpha, gamma, beta, theta, kSecond, true);
      add(beta, theta, alpha, gamma, kFirst, true);
      add(gamma, theta, alpha, beta, kSecond, false);
      add(theta, gamma, beta, alpha, kFirst, false);
    }
  }
  return questions;
}

std::string to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::lrcos: return "lrcos";
    case SolverKind::cos_add: return "3cosadd";
    case SolverKind::cos_mul: return "3cosmul";
    case SolverKind::pair_distance: return "pairdist";
  }
  return "?";
}

SolverKind parse_solver_kind(std::string_view text) {
  if (text == "lrcos") return SolverKind::lrcos;
  if (text == "3cosadd") return SolverKind::cos_add;
  if (text == "3cosmul") return SolverKind::cos_mul;
  if (text == "pairdist" || text == "pairdistance") return SolverKind::pair_distance;
  throw ValidationError("unknown solver '" + std::string(text) + "'");
}

}  // namespace anlgmap
