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

#include "anlgmap/xanlg.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <unordered_map>

#include "anlgmap/error.hpp"
#include "anlgmap/text.hpp"

namespace anlgmap {

MonolingualAnalogySet read_monolingual_set(const std::filesystem::path& path,
                                           const std::string& language) {
  std::vector<AnalogyCategory> categories;
  if (std::filesystem::is_directory(path)) {
    categories = read_analogy_dir(path);
  } else {
    categories.push_back(read_category_file(path));
  }
  MonolingualAnalogySet set{language, {}};
  for (const auto& category : categories) {
    if (!category.has_language(language)) {
      throw ValidationError("analogy set " + path.string() + ": category " + category.name() +
                            " has no '" + language + "' column");
    }
    set.categories[category.name()] = {category.kind(), category.pairs(language)};
  }
  return set;
}

namespace {

using TranslationIndex = std::unordered_map<std::string, std::vector<std::string>>;

TranslationIndex index_dictionary(const BilingualDictionary& dictionary) {
  TranslationIndex index;
  for (const auto& [source, target] : dictionary.entries) {
    if (!is_single_token(target)) continue;
    index[source].push_back(target);
  }
  return index;
}

std::vector<TranslatedPair> translate_with(const std::vector<WordPair>& pairs,
                                           const TranslationIndex& index) {
  std::vector<TranslatedPair> out;
  out.reserve(pairs.size());
  for (const auto& pair : pairs) {
    TranslatedPair t{pair, {}};
    auto first = index.find(pair.first);
    auto second = index.find(pair.second);
    if (first != index.end() && second != index.end()) {
      for (const auto& a : first->second) {
        for (const auto& b : second->second) t.candidates.push_back({a, b});
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> align_rows(
    const std::vector<WordPair>& source_pairs, const std::vector<WordPair>& target_pairs,
    const TranslationIndex& index, IntersectStats& stats) {
  std::map<WordPair, std::size_t> target_position;
  for (std::size_t i = 0; i < target_pairs.size(); ++i) target_position.emplace(target_pairs[i], i);
  std::vector<char> used(target_pairs.size(), 0);

  std::vector<std::pair<std::size_t, std::size_t>> rows;
  auto translated = translate_with(source_pairs, index);
  stats.source_pairs = source_pairs.size();
  for (std::size_t i = 0; i < translated.size(); ++i) {
    if (translated[i].candidates.empty()) continue;
    ++stats.translated;
    std::vector<std::size_t> matches;
    for (const auto& candidate : translated[i].candidates) {
      auto it = target_position.find(candidate);
      if (it != target_position.end() && !used[it->second]) matches.push_back(it->second);
    }
    if (matches.empty()) continue;
    std::sort(matches.begin(), matches.end());
    matches.erase(std::unique(matches.begin(), matches.end()), matches.end());
    if (matches.size() > 1) {
      ++stats.ambiguous;
      spdlog::info("{}/{} matches {} target pairs; keeping {}/{}", source_pairs[i].first,
                   source_pairs[i].second, matches.size(), target_pairs[matches[0]].first,
                   target_pairs[matches[0]].second);
    }
    used[matches[0]] = 1;
    ++stats.coincided;
    rows.emplace_back(i, matches[0]);
  }
  return rows;
}

const MonolingualCategory& category_of(const MonolingualAnalogySet& set, const std::string& name) {
  auto it = set.categories.find(name);
  if (it == set.categories.end()) {
    throw ValidationError("category " + name + " missing from the " + set.language + " analogy set");
  }
  return it->second;
}

}  // namespace

std::vector<TranslatedPair> translate_pairs(const std::vector<WordPair>& pairs,
                                            const BilingualDictionary& dictionary) {
  return translate_with(pairs, index_dictionary(dictionary));
}

std::vector<AlignedPair> intersect_bilingual(const MonolingualAnalogySet& source,
                                             const MonolingualAnalogySet& target,
                                             const BilingualDictionary& dictionary,
                                             const std::string& category,
                                             IntersectStats* stats) {
  if (dictionary.source_lang != source.language || dictionary.target_lang != target.language) {
    throw ValidationError("dictionary " + dictionary.source_lang + "-" + dictionary.target_lang +
                          " does not match " + source.language + "-" + target.language);
  }
  const auto& src = category_of(source, category).pairs;
  const auto& tgt = category_of(target, category).pairs;
  IntersectStats local;
  auto rows = align_rows(src, tgt, index_dictionary(dictionary), local);
  if (stats) *stats = local;
  std::vector<AlignedPair> out;
  out.reserve(rows.size());
  for (const auto& [i, j] : rows) out.push_back({src[i], tgt[j]});
  return out;
}

BuildResult build_corpus(const std::vector<MonolingualAnalogySet>& sets,
                         const DictionarySet& dictionaries, std::size_t min_pairs) {
  if (sets.empty()) throw ValidationError("build_corpus: no analogy sets");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (sets[i].language == sets[j].language) {
        throw ValidationError("language " + sets[i].language + " given twice");
      }
    }
  }
  const auto& pivot = sets.front();

  std::vector<TranslationIndex> indices;
  for (std::size_t k = 1; k < sets.size(); ++k) {
    const auto& lang = sets[k].language;
    if (auto it = dictionaries.find({pivot.language, lang}); it != dictionaries.end()) {
      indices.push_back(index_dictionary(it->second));
    } else if (auto inv = dictionaries.find({lang, pivot.language}); inv != dictionaries.end()) {
      indices.push_back(index_dictionary(inv->second.inverted()));
    } else {
      throw ValidationError("missing dictionary " + pivot.language + "-" + lang);
    }
  }

  BuildResult result;
  result.report.pivot = pivot.language;
  result.report.min_pairs = min_pairs;
  for (const auto& [name, pivot_category] : pivot.categories) {
    CategoryReport report;
    report.name = name;
    report.source_pairs = pivot_category.pairs.size();

    // rows[r][k] = index of the pair in sets[k] for surviving row r.
    std::vector<std::vector<std::size_t>> rows;
    for (std::size_t i = 0; i < pivot_category.pairs.size(); ++i) rows.push_back({i});

    bool missing = false;
    for (std::size_t k = 1; k < sets.size(); ++k) {
      auto it = sets[k].categories.find(name);
      if (it == sets[k].categories.end()) {
        report.reason = "missing in " + sets[k].language;
        missing = true;
        break;
      }
      std::vector<WordPair> current;
      for (const auto& row : rows) current.push_back(pivot_category.pairs[row[0]]);
      IntersectStats stats;
      auto aligned = align_rows(current, it->second.pairs, indices[k - 1], stats);
      report.stages.push_back(
          {sets[k].language, current.size(), stats.translated, stats.coincided, stats.ambiguous});
      std::vector<std::vector<std::size_t>> next;
      next.reserve(aligned.size());
      for (const auto& [r, target_index] : aligned) {
        auto row = rows[r];
        row.push_back(target_index);
        next.push_back(std::move(row));
      }
      rows = std::move(next);
    }

    if (!missing) {
      report.aligned = rows.size();
      if (rows.size() >= min_pairs && !rows.empty()) {
        std::map<std::string, std::vector<WordPair>> by_language;
        for (std::size_t k = 0; k < sets.size(); ++k) {
          const auto& pairs = sets[k].categories.at(name).pairs;
          auto& out = by_language[sets[k].language];
          for (const auto& row : rows) out.push_back(pairs[row[k]]);
        }
        result.corpus.emplace_back(name, pivot_category.kind, std::move(by_language));
        report.kept = true;
      } else {
        report.reason = std::to_string(rows.size()) + " aligned pairs, below the minimum of " +
                        std::to_string(min_pairs);
      }
    }
    if (!report.kept) spdlog::info("category {} dropped: {}", name, report.reason);
    result.report.categories.push_back(std::move(report));
  }
  if (result.corpus.empty()) throw ValidationError("no category survived corpus construction");
  return result;
}

}  // namespace anlgmap
