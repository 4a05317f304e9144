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
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "anlgmap/analogy.hpp"
#include "anlgmap/embedding.hpp"
#include "anlgmap/linear_map.hpp"
#include "anlgmap/stats.hpp"

namespace anlgmap {

// One (language pair, category, series) cell. lang_x is the side whose
// analogies are better encoded (lrcos_x >= lrcos_y, ties broken by language
// code) and S_LMP is measured mapping lang_x onto lang_y.
struct IndicatorRecord {
  std::string lang_x;
  std::string lang_y;
  std::string category;
  AnalogyKind kind = AnalogyKind::semantic;
  std::string series;
  double s_lmp = 0.0;
  double lrcos_x = 0.0;
  double lrcos_y = 0.0;
  double s_pae = 0.0;
  std::size_t aligned_rows = 0;
  std::size_t answered_x = 0;
  std::size_t answered_y = 0;
};

struct OrientedPair {
  std::string lang_x;
  std::string lang_y;
  double lrcos_x;
  double lrcos_y;
};

// Puts the language with the higher accuracy first.
OrientedPair orient_languages(const std::string& lang_a, double lrcos_a,
                              const std::string& lang_b, double lrcos_b);

struct GridOptions {
  EvalOptions eval;
  GDConfig gd;
  std::size_t jobs = 1;
};

// One record per unordered language pair per category, over the languages
// that have both an embedding and pairs in the category. Errors are rethrown
// with the (pair, category) context.
std::vector<IndicatorRecord> build_indicator_grid(
    const std::map<std::string, const Embedding*>& embeddings,
    const std::vector<AnalogyCategory>& corpus, const std::string& series,
    const GridOptions& options = {});

// Fixed header:
// series,category,kind,lang_x,lang_y,s_lmp,lrcos_x,lrcos_y,s_pae,aligned_rows,answered_x,answered_y
void write_grid_csv(std::ostream& out, const std::vector<IndicatorRecord>& records);
void write_grid_csv(const std::filesystem::path& path, const std::vector<IndicatorRecord>& records);
std::vector<IndicatorRecord> read_grid_csv(const std::filesystem::path& path);

enum class GroupField { series, category, kind };
std::vector<GroupField> parse_group_by(const std::string& spec);

struct CorrelationReport {
  std::map<std::string, std::string> group_key;
  AnalogyKind kind = AnalogyKind::semantic;
  bool mixed_kinds = false;
  std::size_t n = 0;
  double spearman_rho = 0.0;
  double pearson_r = 0.0;
  double p_spearman = 1.0;
  double p_pearson = 1.0;
};

struct KindAnova {
  std::size_t semantic_groups = 0;
  std::size_t syntactic_groups = 0;
  AnovaResult spearman;
  AnovaResult pearson;
};

struct CorrelationSummary {
  std::vector<CorrelationReport> groups;
  // Semantic vs syntactic split of the per-group coefficients, when every
  // group has a single kind and each side has at least 2 groups.
  std::optional<KindAnova> kind_anova;
  // "<group label>: <reason>" for every group left out.
  std::vector<std::string> skipped;
};

struct CorrelateOptions {
  std::vector<GroupField> group_by{GroupField::series, GroupField::category};
  // 0: t-distribution p-values; otherwise permutation p-values.
  std::size_t permutations = 0;
  std::uint64_t seed = 0;
};

// Correlates S_LMP with S_PAE within each group; groups with fewer than 3
// records or a constant column are skipped.
CorrelationSummary correlate(const std::vector<IndicatorRecord>& records,
                             const CorrelateOptions& options = {});

}  // namespace anlgmap
