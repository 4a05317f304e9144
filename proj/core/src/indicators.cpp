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

#include "anlgmap/indicators.hpp"

#include <spdlog/spdlog.h>

#include <charconv>
#include <fstream>
#include <sstream>

#include "anlgmap/error.hpp"
#include "anlgmap/parallel.hpp"
#include "anlgmap/rng.hpp"
#include "anlgmap/text.hpp"

namespace anlgmap {

OrientedPair orient_languages(const std::string& lang_a, double lrcos_a,
                              const std::string& lang_b, double lrcos_b) {
  bool a_first = lrcos_a > lrcos_b || (lrcos_a == lrcos_b && lang_a <= lang_b);
  if (a_first) return {lang_a, lang_b, lrcos_a, lrcos_b};
  return {lang_b, lang_a, lrcos_b, lrcos_a};
}

std::vector<IndicatorRecord> build_indicator_grid(
    const std::map<std::string, const Embedding*>& embeddings,
    const std::vector<AnalogyCategory>& corpus, const std::string& series,
    const GridOptions& options) {
  struct Monolingual {
    const AnalogyCategory* category;
    std::string language;
    SolverResult result;
  };
  struct Cell {
    const AnalogyCategory* category;
    std::size_t first;  // indices into the monolingual list
    std::size_t second;
  };

  std::vector<Monolingual> mono;
  std::vector<Cell> cells;
  for (const auto& category : corpus) {
    std::vector<std::size_t> slots;
    for (const auto& language : category.languages()) {
      if (!embeddings.contains(language)) continue;
      slots.push_back(mono.size());
      mono.push_back({&category, language, {}});
    }
    if (slots.size() < 2) {
      spdlog::warn("category {}: fewer than 2 languages with embeddings, skipped", category.name());
      continue;
    }
    for (std::size_t i = 0; i < slots.size(); ++i) {
      for (std::size_t j = i + 1; j < slots.size(); ++j) cells.push_back({&category, slots[i], slots[j]});
    }
  }
  if (cells.empty()) throw ValidationError("no category is shared by two embedded languages");

  EvalOptions eval = options.eval;
  eval.jobs = 1;
  parallel_for(mono.size(), options.jobs, [&](std::size_t i) {
    auto& m = mono[i];
    try {
      m.result = category_accuracy(*embeddings.at(m.language), *m.category, eval);
    } catch (const ValidationError& e) {
      throw ValidationError("category " + m.category->name() + ", language " + m.language + ": " +
                            e.what());
    }
  });

  std::vector<IndicatorRecord> records(cells.size());
  parallel_for(cells.size(), options.jobs, [&](std::size_t k) {
    const Cell& cell = cells[k];
    const auto& a = mono[cell.first];
    const auto& b = mono[cell.second];
    auto oriented = orient_languages(a.language, a.result.accuracy, b.language, b.result.accuracy);
    const auto& mx = oriented.lang_x == a.language ? a : b;
    const auto& my = oriented.lang_x == a.language ? b : a;
    try {
      auto dictionary = dictionary_from_category(*cell.category, oriented.lang_x, oriented.lang_y);
      auto pair = build_aligned(*embeddings.at(oriented.lang_x), *embeddings.at(oriented.lang_y),
                                dictionary);
      auto fit = fit_linear_gd(pair, options.gd);
      IndicatorRecord& r = records[k];
      r.lang_x = oriented.lang_x;
      r.lang_y = oriented.lang_y;
      r.category = cell.category->name();
      r.kind = cell.category->kind();
      r.series = series;
      r.s_lmp = fit.s_lmp;
      r.lrcos_x = oriented.lrcos_x;
      r.lrcos_y = oriented.lrcos_y;
      r.s_pae = s_pae(oriented.lrcos_x, oriented.lrcos_y);
      r.aligned_rows = pair.rows();
      r.answered_x = mx.result.answered;
      r.answered_y = my.result.answered;
    } catch (const ValidationError& e) {
      throw ValidationError("pair " + oriented.lang_x + "-" + oriented.lang_y + ", category " +
                            cell.category->name() + ": " + e.what());
    }
  });
  return records;
}

namespace {

constexpr const char* kGridHeader =
    "series,category,kind,lang_x,lang_y,s_lmp,lrcos_x,lrcos_y,s_pae,aligned_rows,answered_x,"
    "answered_y";

std::string format_double(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

void check_csv_field(const std::string& field) {
  if (field.find_first_of(",\n\r\"") != std::string::npos) {
    throw ValidationError("value '" + field + "' cannot be stored in the grid CSV");
  }
}

template <typename T>
T parse_number(std::string_view field, const std::string& file, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(file, line, "cannot parse number '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

void write_grid_csv(std::ostream& out, const std::vector<IndicatorRecord>& records) {
  out << kGridHeader << '\n';
  for (const auto& r : records) {
    for (const auto* field : {&r.series, &r.category, &r.lang_x, &r.lang_y}) check_csv_field(*field);
    out << r.series << ',' << r.category << ',' << to_string(r.kind) << ',' << r.lang_x << ','
        << r.lang_y << ',' << format_double(r.s_lmp) << ',' << format_double(r.lrcos_x) << ','
        << format_double(r.lrcos_y) << ',' << format_double(r.s_pae) << ',' << r.aligned_rows
        << ',' << r.answered_x << ',' << r.answered_y << '\n';
  }
}

void write_grid_csv(const std::filesystem::path& path, const std::vector<IndicatorRecord>& records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write " + path.string());
  write_grid_csv(out, records);
}

std::vector<IndicatorRecord> read_grid_csv(const std::filesystem::path& path) {
  const std::string file = path.string();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open grid " + file);
  std::string line;
  if (!std::getline(in, line) || rstrip(line) != kGridHeader) {
    throw ParseError(file, 1, std::string("expected header '") + kGridHeader + "'");
  }
  std::vector<IndicatorRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    auto text = rstrip(line);
    if (text.empty()) continue;
    auto f = split(text, ',');
    if (f.size() != 12) throw ParseError(file, line_no, "expected 12 fields");
    IndicatorRecord r;
    r.series = f[0];
    r.category = f[1];
    if (f[2] != "semantic" && f[2] != "syntactic") throw ParseError(file, line_no, "bad kind");
    r.kind = parse_analogy_kind(f[2]);
    r.lang_x = f[3];
    r.lang_y = f[4];
    r.s_lmp = parse_number<double>(f[5], file, line_no);
    r.lrcos_x = parse_number<double>(f[6], file, line_no);
    r.lrcos_y = parse_number<double>(f[7], file, line_no);
    r.s_pae = parse_number<double>(f[8], file, line_no);
    r.aligned_rows = parse_number<std::size_t>(f[9], file, line_no);
    r.answered_x = parse_number<std::size_t>(f[10], file, line_no);
    r.answered_y = parse_number<std::size_t>(f[11], file, line_no);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<GroupField> parse_group_by(const std::string& spec) {
  std::vector<GroupField> fields;
  if (spec.empty()) return fields;
  for (auto name : split(spec, ',')) {
    if (name == "series") {
      fields.push_back(GroupField::series);
    } else if (name == "category") {
      fields.push_back(GroupField::category);
    } else if (name == "kind") {
      fields.push_back(GroupField::kind);
    } else {
      throw ValidationError("unknown --group-by field '" + std::string(name) + "'");
    }
  }
  return fields;
}

CorrelationSummary correlate(const std::vector<IndicatorRecord>& records,
                             const CorrelateOptions& options) {
  auto field_name = [](GroupField f) {
    switch (f) {
      case GroupField::series: return "series";
      case GroupField::category: return "category";
      case GroupField::kind: return "kind";
    }
    return "?";
  };
  auto field_value = [](GroupField f, const IndicatorRecord& r) {
    switch (f) {
      case GroupField::series: return r.series;
      case GroupField::category: return r.category;
      case GroupField::kind: return to_string(r.kind);
    }
    return std::string();
  };

  std::map<std::map<std::string, std::string>, std::vector<const IndicatorRecord*>> groups;
  for (const auto& r : records) {
    std::map<std::string, std::string> key;
    for (auto f : options.group_by) key[field_name(f)] = field_value(f, r);
    groups[key].push_back(&r);
  }

  CorrelationSummary summary;
  std::uint64_t group_index = 0;
  for (const auto& [key, members] : groups) {
    std::string label;
    for (const auto& [k, v] : key) label += (label.empty() ? "" : ",") + k + "=" + v;
    if (label.empty()) label = "all";
    ++group_index;

    std::vector<double> lmp, pae;
    for (const auto* r : members) {
      lmp.push_back(r->s_lmp);
      pae.push_back(r->s_pae);
    }
    CorrelationReport report;
    report.group_key = key;
    report.n = members.size();
    report.kind = members.front()->kind;
    for (const auto* r : members) report.mixed_kinds |= r->kind != report.kind;
    try {
      auto rho = spearman_rho(lmp, pae);
      auto r = pearson_r(lmp, pae);
      report.spearman_rho = rho.coefficient;
      report.pearson_r = r.coefficient;
      if (options.permutations > 0) {
        report.p_spearman = permutation_p_value(lmp, pae, CorrelationMethod::spearman,
                                                options.permutations,
                                                Rng::derive(options.seed, 2 * group_index));
        report.p_pearson = permutation_p_value(lmp, pae, CorrelationMethod::pearson,
                                               options.permutations,
                                               Rng::derive(options.seed, 2 * group_index + 1));
      } else {
        report.p_spearman = rho.p_value;
        report.p_pearson = r.p_value;
      }
    } catch (const ValidationError& e) {
      summary.skipped.push_back(label + ": " + e.what());
      continue;
    }
    summary.groups.push_back(std::move(report));
  }

  std::vector<double> sem_rho, syn_rho, sem_r, syn_r;
  bool mixed = false;
  for (const auto& g : summary.groups) {
    mixed |= g.mixed_kinds;
    auto& rho = g.kind == AnalogyKind::semantic ? sem_rho : syn_rho;
    auto& r = g.kind == AnalogyKind::semantic ? sem_r : syn_r;
    rho.push_back(g.spearman_rho);
    r.push_back(g.pearson_r);
  }
  if (!mixed && sem_rho.size() >= 2 && syn_rho.size() >= 2) {
    try {
      KindAnova anova;
      anova.semantic_groups = sem_rho.size();
      anova.syntactic_groups = syn_rho.size();
      anova.spearman = anova_two_treatment(sem_rho, syn_rho);
      anova.pearson = anova_two_treatment(sem_r, syn_r);
      summary.kind_anova = anova;
    } catch (const ValidationError& e) {
      summary.skipped.push_back(std::string("kind ANOVA: ") + e.what());
    }
  }
  return summary;
}

}  // namespace anlgmap
