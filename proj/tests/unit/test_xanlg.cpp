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

#include "anlgmap/error.hpp"
#include "anlgmap/xanlg.hpp"
#include "fixtures.hpp"

using namespace anlgmap;

namespace {

MonolingualAnalogySet set_of(const std::string& lang, std::vector<WordPair> pairs) {
  return {lang, {{"CAP", {AnalogyKind::semantic, std::move(pairs)}}}};
}

}  // namespace

TEST(TranslatePairs, SingleEntries) {
  BilingualDictionary d{"en", "de", {{"paris", "paris"}, {"france", "frankreich"}}};
  auto out = translate_pairs({{"paris", "france"}}, d);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].candidates, (std::vector<WordPair>{{"paris", "frankreich"}}));
}

TEST(TranslatePairs, CrossProductOfAlternatives) {
  BilingualDictionary d{"en", "de", {{"a", "a1"}, {"a", "a2"}, {"b", "b1"}, {"b", "b2"}}};
  auto out = translate_pairs({{"a", "b"}}, d);
  EXPECT_EQ(out[0].candidates.size(), 4u);
}

TEST(TranslatePairs, UntranslatableAndMultiwordTargets) {
  BilingualDictionary d{"en", "de", {{"a", "a1"}, {"b", "two words"}}};
  EXPECT_TRUE(translate_pairs({{"a", "zz"}}, d)[0].candidates.empty());
  EXPECT_TRUE(translate_pairs({{"a", "b"}}, d)[0].candidates.empty());
}

TEST(Intersect, OrderSensitive) {
  BilingualDictionary d{"en", "de", {{"paris", "paris"}, {"france", "frankreich"}}};
  auto en = set_of("en", {{"paris", "france"}});
  EXPECT_EQ(intersect_bilingual(en, set_of("de", {{"frankreich", "paris"}}), d, "CAP").size(), 0u);
  auto kept = intersect_bilingual(en, set_of("de", {{"paris", "frankreich"}}), d, "CAP");
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0].target, (WordPair{"paris", "frankreich"}));
}

TEST(Intersect, PlantedSubset) {
  BilingualDictionary d{"en", "de", {}};
  std::vector<WordPair> src, tgt;
  for (int i = 0; i < 5; ++i) {
    std::string s = std::to_string(i);
    src.push_back({"x" + s, "y" + s});
    d.add("x" + s, "u" + s);
    d.add("y" + s, "v" + s);
    if (i % 2 == 0) tgt.push_back({"u" + s, "v" + s});
  }
  tgt.push_back({"u1", "zz"});
  IntersectStats stats;
  auto out = intersect_bilingual(set_of("en", src), set_of("de", tgt), d, "CAP", &stats);
  EXPECT_EQ(out.size(), 3u);
  EXPECT_EQ(stats.source_pairs, 5u);
  EXPECT_EQ(stats.translated, 5u);
  EXPECT_EQ(stats.coincided, 3u);
}

TEST(Intersect, DictionaryDirectionChecked) {
  BilingualDictionary d{"de", "en", {}};
  EXPECT_THROW(intersect_bilingual(set_of("en", {}), set_of("de", {}), d, "CAP"), ValidationError);
}

TEST(BuildCorpus, SingleLanguageIsIdentity) {
  MonolingualAnalogySet en{"en", {}};
  for (int i = 0; i < 30; ++i) {
    en.categories["CAP"].pairs.push_back({"a" + std::to_string(i), "b" + std::to_string(i)});
  }
  auto result = build_corpus({en}, {});
  ASSERT_EQ(result.corpus.size(), 1u);
  EXPECT_EQ(result.corpus[0].pairs("en"), en.categories["CAP"].pairs);
}

TEST(BuildCorpus, MinimumPairsFilter) {
  auto f = fixture::planted_builder({{"KEEP", 30}, {"DROP", 29}});
  auto result = build_corpus(f.sets, f.dictionaries, 30);
  ASSERT_EQ(result.corpus.size(), 1u);
  EXPECT_EQ(result.corpus[0].name(), "KEEP");
  EXPECT_EQ(result.corpus[0].size(), 30u);
  for (const auto& report : result.report.categories) {
    EXPECT_EQ(report.kept, report.name == "KEEP");
    EXPECT_EQ(report.stages.size(), 2u);
  }
  // Rows stay aligned across languages even though de is stored reversed.
  const auto& en = result.corpus[0].pairs("en");
  const auto& de = result.corpus[0].pairs("de");
  for (std::size_t i = 0; i < en.size(); ++i) EXPECT_EQ("de" + en[i].first.substr(2), de[i].first);
}

TEST(BuildCorpus, Errors) {
  auto f = fixture::planted_builder({{"KEEP", 30}});
  auto missing = f.dictionaries;
  missing.erase({"fr", "en"});
  EXPECT_THROW(build_corpus(f.sets, missing), ValidationError);
  EXPECT_THROW(build_corpus(f.sets, f.dictionaries, 31), ValidationError);
  EXPECT_THROW(build_corpus({}, {}), ValidationError);
}
