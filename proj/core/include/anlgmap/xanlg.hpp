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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anlgmap/analogy.hpp"
#include "anlgmap/linear_map.hpp"

namespace anlgmap {

struct MonolingualCategory {
  AnalogyKind kind = AnalogyKind::semantic;
  std::vector<WordPair> pairs;
};

struct MonolingualAnalogySet {
  std::string language;
  std::map<std::string, MonolingualCategory> categories;
};

// Reads single-language category files (a file, or every *.tsv / *.txt in a
// directory). A multi-language file contributes its `language` column.
MonolingualAnalogySet read_monolingual_set(const std::filesystem::path& path,
                                           const std::string& language);

struct TranslatedPair {
  WordPair source;
  // Cross product of per-word translations, dictionary order; multi-word
  // translations are dropped.
  std::vector<WordPair> candidates;
};

std::vector<TranslatedPair> translate_pairs(const std::vector<WordPair>& pairs,
                                            const BilingualDictionary& dictionary);

struct AlignedPair {
  WordPair source;
  WordPair target;
};

struct IntersectStats {
  std::size_t source_pairs = 0;
  std::size_t translated = 0;  // pairs with at least one candidate
  std::size_t coincided = 0;   // pairs aligned to a target pair
  std::size_t ambiguous = 0;   // aligned pairs that had more than one free match
};

// Keeps source pairs whose translation equals a not-yet-used target pair
// (order-sensitive). The earliest match in target-set order wins.
std::vector<AlignedPair> intersect_bilingual(const MonolingualAnalogySet& source,
                                             const MonolingualAnalogySet& target,
                                             const BilingualDictionary& dictionary,
                                             const std::string& category,
                                             IntersectStats* stats = nullptr);

struct StageCounts {
  std::string language;
  std::size_t input_rows = 0;
  std::size_t translated = 0;
  std::size_t coincided = 0;
  std::size_t ambiguous = 0;
};

struct CategoryReport {
  std::string name;
  std::size_t source_pairs = 0;
  std::vector<StageCounts> stages;
  std::size_t aligned = 0;
  bool kept = false;
  std::string reason;  // why a category was dropped
};

struct BuildReport {
  std::string pivot;
  std::size_t min_pairs = 0;
  std::vector<CategoryReport> categories;
};

// Dictionaries keyed by "src-tgt" language codes.
using DictionarySet = std::map<std::pair<std::string, std::string>, BilingualDictionary>;

struct BuildResult {
  std::vector<AnalogyCategory> corpus;
  BuildReport report;
};

// Aligns the pivot (first) set with each further language in order, keeping
// only rows that survive every step; categories with fewer than `min_pairs`
// fully aligned rows are dropped. A missing pivot-L dictionary falls back to
// the inverse of L-pivot. Throws on a missing dictionary or an empty corpus.
BuildResult build_corpus(const std::vector<MonolingualAnalogySet>& sets,
                         const DictionarySet& dictionaries, std::size_t min_pairs = 30);

}  // namespace anlgmap
