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
#include <fstream>
#include <set>

#include "anlgmap/analogy.hpp"
#include "anlgmap/error.hpp"
#include "anlgmap/text.hpp"

namespace anlgmap {

std::string to_string(AnalogyKind kind) {
  return kind == AnalogyKind::semantic ? "semantic" : "syntactic";
}

AnalogyKind parse_analogy_kind(std::string_view text) {
  if (text == "semantic") return AnalogyKind::semantic;
  if (text == "syntactic") return AnalogyKind::syntactic;
  throw ValidationError("unknown analogy kind '" + std::string(text) + "'");
}

AnalogyCategory::AnalogyCategory(std::string name, AnalogyKind kind,
                                 std::map<std::string, std::vector<WordPair>> pairs_by_language)
    : name_(std::move(name)), kind_(kind), pairs_(std::move(pairs_by_language)) {
  if (name_.empty() || !is_single_token(name_)) {
    throw ValidationError("analogy category name must be a single non-empty token");
  }
  if (pairs_.empty()) throw ValidationError("category " + name_ + " has no languages");
  bool first = true;
  for (auto& [language, pairs] : pairs_) {
    if (first) {
      size_ = pairs.size();
      first = false;
    } else if (pairs.size() != size_) {
      throw ValidationError("category " + name_ + ": language " + language + " has " +
                            std::to_string(pairs.size()) + " pairs, expected " +
                            std::to_string(size_));
    }
    std::set<WordPair> seen;
    for (auto& pair : pairs) {
      pair.first = nfc(pair.first);
      pair.second = nfc(pair.second);
      if (pair.first.empty() || pair.second.empty()) {
        throw ValidationError("category " + name_ + ": empty word in " + language);
      }
      if (!seen.insert(pair).second) {
        throw ValidationError("category " + name_ + ": duplicate pair " + pair.first + "/" +
                              pair.second + " in " + language);
      }
    }
  }
}

std::vector<std::string> AnalogyCategory::languages() const {
  std::vector<std::string> out;
  out.reserve(pairs_.size());
  for (const auto& [language, pairs] : pairs_) out.push_back(language);
  return out;
}

const std::vector<WordPair>& AnalogyCategory::pairs(const std::string& language) const {
  auto it = pairs_.find(language);
  if (it == pairs_.end()) {
    throw ValidationError("category " + name_ + " has no language '" + language + "'");
  }
  return it->second;
}

AnalogyCategory read_category_file(const std::filesystem::path& path) {
  const std::string file = path.string();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open analogy file " + file);

  std::string line;
  if (!std::getline(in, line)) throw ParseError(file, 1, "empty analogy file");
  auto head = split(rstrip(line), ' ');
  if (head.size() != 3 || head[0] != "#category") {
    throw ParseError(file, 1, "expected '#category <name> <semantic|syntactic>'");
  }
  std::string name(head[1]);
  if (head[2] != "semantic" && head[2] != "syntactic") {
    throw ParseError(file, 1, "unknown analogy kind '" + std::string(head[2]) + "'");
  }
  AnalogyKind kind = parse_analogy_kind(head[2]);

  if (!std::getline(in, line)) throw ParseError(file, 2, "missing language header");
  std::vector<std::string> languages;
  for (auto code : split(rstrip(line), '\t')) {
    if (code.empty()) throw ParseError(file, 2, "empty language code");
    languages.emplace_back(code);
  }
  if (std::set<std::string>(languages.begin(), languages.end()).size() != languages.size()) {
    throw ParseError(file, 2, "repeated language code");
  }

  std::map<std::string, std::vector<WordPair>> pairs;
  for (const auto& language : languages) pairs[language];
  std::size_t line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    auto trimmed = rstrip(line);
    if (trimmed.empty()) continue;
    auto cells = split(trimmed, '\t');
    if (cells.size() != languages.size()) {
      throw ParseError(file, line_no,
                       "expected " + std::to_string(languages.size()) + " cells, found " +
                           std::to_string(cells.size()));
    }
    for (std::size_t k = 0; k < cells.size(); ++k) {
      auto slash = cells[k].find('/');
      if (slash == std::string_view::npos || cells[k].find('/', slash + 1) != std::string_view::npos) {
        throw ParseError(file, line_no, "cell '" + std::string(cells[k]) + "' is not word_a/word_b");
      }
      pairs[languages[k]].push_back(
          {std::string(cells[k].substr(0, slash)), std::string(cells[k].substr(slash + 1))});
    }
  }
  try {
    return AnalogyCategory(std::move(name), kind, std::move(pairs));
  } catch (const ValidationError& e) {
    throw ValidationError(file + ": " + e.what());
  }
}

void write_category_file(const std::filesystem::path& path, const AnalogyCategory& category) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << "#category " << category.name() << ' ' << to_string(category.kind()) << '\n';
  auto languages = category.languages();
  for (std::size_t k = 0; k < languages.size(); ++k) out << (k ? "\t" : "") << languages[k];
  out << '\n';
  for (std::size_t i = 0; i < category.size(); ++i) {
    for (std::size_t k = 0; k < languages.size(); ++k) {
      const auto& pair = category.pairs(languages[k])[i];
      out << (k ? "\t" : "") << pair.first << '/' << pair.second;
    }
    out << '\n';
  }
}

std::vector<AnalogyCategory> read_analogy_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw ValidationError("analogy directory " + dir.string() + " does not exist");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".tsv" || ext == ".txt")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<AnalogyCategory> corpus;
  for (const auto& file : files) corpus.push_back(read_category_file(file));
  std::sort(corpus.begin(), corpus.end(),
            [](const auto& x, const auto& y) { return x.name() < y.name(); });
  for (std::size_t i = 1; i < corpus.size(); ++i) {
    if (corpus[i].name() == corpus[i - 1].name()) {
      throw ValidationError("category " + corpus[i].name() + " defined twice in " + dir.string());
    }
  }
  if (corpus.empty()) throw ValidationError("no category files in " + dir.string());
  return corpus;
}

void write_analogy_dir(const std::filesystem::path& dir, const std::vector<AnalogyCategory>& corpus) {
  std::filesystem::create_directories(dir);
  for (const auto& category : corpus) {
    write_category_file(dir / (category.name() + ".tsv"), category);
  }
}

const AnalogyCategory& find_category(const std::vector<AnalogyCategory>& corpus,
                                     const std::string& name) {
  for (const auto& category : corpus) {
    if (category.name() == name) return category;
  }
  throw ValidationError("no analogy category named '" + name + "'");
}

}  // namespace anlgmap
