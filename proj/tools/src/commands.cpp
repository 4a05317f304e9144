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

#include "commands.hpp"

#include <spdlog/spdlog.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <ostream>
#include <set>
#include <unordered_set>

#include "anlgmap/analogy.hpp"
#include "anlgmap/embedding.hpp"
#include "anlgmap/error.hpp"
#include "anlgmap/indicators.hpp"
#include "anlgmap/linear_map.hpp"
#include "anlgmap/rng.hpp"
#include "anlgmap/stats.hpp"
#include "anlgmap/synth.hpp"
#include "anlgmap/text.hpp"
#include "anlgmap/transport.hpp"
#include "anlgmap/xanlg.hpp"

namespace anlgmap::cli {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

struct Assignment {
  std::string key;
  fs::path path;
};

Assignment parse_assignment(const std::string& text, const std::string& flag) {
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
    throw ValidationError(flag + " expects <key>=<path>, got '" + text + "'");
  }
  Assignment a{text.substr(0, eq), fs::path(text.substr(eq + 1))};
  if (!fs::exists(a.path)) throw ValidationError(flag + ": " + a.path.string() + " does not exist");
  return a;
}

std::vector<Assignment> parse_assignments(const std::vector<std::string>& texts,
                                          const std::string& flag) {
  std::vector<Assignment> out;
  std::set<std::string> keys;
  for (const auto& text : texts) {
    out.push_back(parse_assignment(text, flag));
    if (!keys.insert(out.back().key).second) {
      throw ValidationError(flag + ": '" + out.back().key + "' given twice");
    }
  }
  return out;
}

Embedding load_embedding(const EmbeddingCache& cache, const Assignment& a,
                         std::optional<std::size_t> limit) {
  spdlog::info("loading {} vectors from {}", a.key, a.path.string());
  auto loaded = cache.load(a.path, a.key, limit);
  if (!loaded.duplicates.empty()) {
    spdlog::warn("{}: {} duplicate tokens kept at first occurrence", a.path.string(),
                 loaded.duplicates.size());
  }
  return std::move(loaded.embedding);
}

Json common_json(const CommonArgs& common) {
  return Json{{"jobs", common.jobs}, {"log_level", common.log_level}, {"seed", common.seed}};
}

Json optional_json(const std::optional<std::size_t>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json report_header(const std::string& command, Json config) {
  return Json{{"schema_version", kSchemaVersion}, {"command", command}, {"config", std::move(config)}};
}

void write_json(const fs::path& path, const Json& report) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << report.dump(2) << '\n';
  if (!out) throw ValidationError("failed writing " + path.string());
}

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  return out;
}

void require_nonempty_flag(const std::string& value, const std::string& flag) {
  if (value.empty()) throw ValidationError(flag + " must not be empty");
}

Json solver_json(const SolverResult& r) {
  return Json{{"accuracy", r.accuracy},
              {"answered", r.answered},
              {"correct", r.correct},
              {"skipped_oov", r.skipped_oov}};
}

Json correlation_json(const CorrelationReport& r) {
  Json key = Json::object();
  for (const auto& [field, value] : r.group_key) key[field] = value;
  return Json{{"group", key},
              {"kind", to_string(r.kind)},
              {"mixed_kinds", r.mixed_kinds},
              {"n", r.n},
              {"spearman_rho", r.spearman_rho},
              {"p_spearman", r.p_spearman},
              {"pearson_r", r.pearson_r},
              {"p_pearson", r.p_pearson}};
}

Json summary_json(const CorrelationSummary& summary) {
  Json groups = Json::array();
  for (const auto& g : summary.groups) groups.push_back(correlation_json(g));
  Json anova = nullptr;
  if (summary.kind_anova) {
    const auto& a = *summary.kind_anova;
    anova = Json{{"semantic_groups", a.semantic_groups},
                 {"syntactic_groups", a.syntactic_groups},
                 {"spearman", {{"f", a.spearman.f}, {"p_value", a.spearman.p_value}}},
                 {"pearson", {{"f", a.pearson.f}, {"p_value", a.pearson.p_value}}}};
  }
  return Json{{"groups", groups}, {"kind_anova", anova}, {"skipped", summary.skipped}};
}

Json record_json(const IndicatorRecord& r) {
  return Json{{"series", r.series},       {"category", r.category},
              {"kind", to_string(r.kind)}, {"lang_x", r.lang_x},
              {"lang_y", r.lang_y},        {"s_lmp", r.s_lmp},
              {"lrcos_x", r.lrcos_x},      {"lrcos_y", r.lrcos_y},
              {"s_pae", r.s_pae},          {"aligned_rows", r.aligned_rows},
              {"answered_x", r.answered_x}, {"answered_y", r.answered_y}};
}

std::string group_label(const CorrelationReport& r) {
  std::string label;
  for (const auto& [field, value] : r.group_key) {
    if (!label.empty()) label += ' ';
    label += field + "=" + value;
  }
  return label.empty() ? "all" : label;
}

}  // namespace

int run_fit_map(const CommonArgs& common, const FitMapArgs& args, std::ostream& out) {
  auto ax = parse_assignment(args.emb_x, "--emb-x");
  auto ay = parse_assignment(args.emb_y, "--emb-y");
  if (ax.key == ay.key) throw ValidationError("--emb-x and --emb-y name the same language");
  if (!args.category.empty() && args.analogy.empty()) {
    throw ValidationError("--category needs --analogy");
  }
  if (args.dict.empty() && args.category.empty()) {
    throw ValidationError("fit-map needs --dict, or --analogy with --category");
  }
  std::optional<AnalogyCategory> category;
  if (!args.category.empty()) {
    category = find_category(read_analogy_dir(args.analogy), args.category);
    for (const auto& lang : {ax.key, ay.key}) {
      if (!category->has_language(lang)) {
        throw ValidationError("category " + args.category + " has no '" + lang + "' column");
      }
    }
  }
  BilingualDictionary dictionary = args.dict.empty()
                                       ? dictionary_from_category(*category, ax.key, ay.key)
                                       : read_muse_dictionary(args.dict, ax.key, ay.key);

  auto cache = EmbeddingCache::from_environment();
  Embedding x = load_embedding(cache, ax, args.limit);
  Embedding y = load_embedding(cache, ay, args.limit);

  std::unordered_set<std::string> filter;
  if (category && !args.dict.empty()) {
    for (const auto& pair : category->pairs(ax.key)) {
      filter.insert(nfc(pair.first));
      filter.insert(nfc(pair.second));
    }
  }
  auto aligned = build_aligned(x, y, dictionary, filter.empty() ? nullptr : &filter);
  auto fit = fit_linear_gd(aligned);
  auto closed = fit_linear_closed(aligned);

  Json report = report_header("fit-map", Json{{"emb_x", args.emb_x},
                                              {"emb_y", args.emb_y},
                                              {"dict", args.dict},
                                              {"analogy", args.analogy},
                                              {"category", args.category},
                                              {"limit", optional_json(args.limit)},
                                              {"common", common_json(common)}});
  report["result"] = Json{{"lang_x", x.language()},
                          {"lang_y", y.language()},
                          {"aligned_rows", aligned.rows()},
                          {"s_lmp", fit.s_lmp},
                          {"residual", fit.residual},
                          {"iterations", fit.iterations},
                          {"converged", fit.converged},
                          {"closed_form_residual", closed.residual}};
  if (!args.report.empty()) write_json(args.report, report);
  out << "S_LMP " << fit.s_lmp << " over " << aligned.rows() << " rows (" << x.language() << " -> "
      << y.language() << ")\n";
  return 0;
}

int run_analogy_eval(const CommonArgs& common, const AnalogyEvalArgs& args, std::ostream& out) {
  auto specs = parse_assignments(args.emb, "--emb");
  auto corpus = read_analogy_dir(args.analogy);
  if (!args.category.empty()) corpus = {find_category(corpus, args.category)};
  SolverKind solver = parse_solver_kind(args.solver);

  auto cache = EmbeddingCache::from_environment();
  EvalOptions options;
  options.solver = solver;
  options.lrcos.seed = common.seed;
  options.jobs = common.jobs;

  Json results = Json::array();
  for (const auto& spec : specs) {
    Embedding embedding = load_embedding(cache, spec, args.limit);
    for (const auto& category : corpus) {
      if (!category.has_language(spec.key)) {
        spdlog::warn("category {} has no '{}' column; skipped", category.name(), spec.key);
        continue;
      }
      auto result = category_accuracy(embedding, category, options);
      Json row{{"language", spec.key}, {"category", category.name()}, {"kind", to_string(category.kind())}};
      row.update(solver_json(result));
      results.push_back(row);
      out << spec.key << '\t' << category.name() << '\t' << to_string(solver) << '\t'
          << result.accuracy << '\t' << result.correct << '/' << result.answered << '\n';
    }
  }
  if (results.empty()) throw ValidationError("no category has a column for the given languages");

  Json report = report_header("analogy-eval", Json{{"emb", args.emb},
                                                   {"analogy", args.analogy},
                                                   {"category", args.category},
                                                   {"solver", to_string(solver)},
                                                   {"limit", optional_json(args.limit)},
                                                   {"common", common_json(common)}});
  report["results"] = results;
  if (!args.report.empty()) write_json(args.report, report);
  return 0;
}

int run_indicators(const CommonArgs& common, const IndicatorsArgs& args, std::ostream& out) {
  auto specs = parse_assignments(args.emb, "--emb");
  if (specs.size() < 2) throw ValidationError("indicators needs at least two --emb languages");
  require_nonempty_flag(args.series, "--series");
  require_nonempty_flag(args.out, "--out");
  auto corpus = read_analogy_dir(args.analogy);

  auto cache = EmbeddingCache::from_environment();
  std::map<std::string, Embedding> embeddings;
  for (const auto& spec : specs) embeddings.emplace(spec.key, load_embedding(cache, spec, args.limit));
  std::map<std::string, const Embedding*> views;
  for (const auto& [lang, e] : embeddings) views.emplace(lang, &e);

  GridOptions options;
  options.eval.lrcos.seed = common.seed;
  options.jobs = common.jobs;
  auto records = build_indicator_grid(views, corpus, args.series, options);
  write_grid_csv(fs::path(args.out), records);

  Json grid = Json::array();
  for (const auto& r : records) grid.push_back(record_json(r));
  CorrelationSummary summary = correlate(records, {.group_by = {GroupField::series, GroupField::category}});

  Json report = report_header("indicators", Json{{"emb", args.emb},
                                                 {"analogy", args.analogy},
                                                 {"series", args.series},
                                                 {"limit", optional_json(args.limit)},
                                                 {"out", args.out},
                                                 {"common", common_json(common)}});
  report["grid"] = grid;
  report["correlation"] = summary_json(summary);
  if (!args.report.empty()) write_json(args.report, report);
  out << records.size() << " grid rows written to " << args.out << '\n';
  return 0;
}

int run_correlate(const CommonArgs& common, const CorrelateArgs& args, std::ostream& out) {
  auto group_by = parse_group_by(args.group_by);
  std::vector<IndicatorRecord> records;
  for (const auto& path : args.grid) {
    auto part = read_grid_csv(path);
    records.insert(records.end(), part.begin(), part.end());
  }
  auto summary = correlate(records, {.group_by = group_by, .permutations = args.permute, .seed = common.seed});

  Json groups = summary_json(summary);
  groups["p_value_method"] = args.permute > 0 ? "permutation" : "t";
  Json report = report_header("correlate", Json{{"grid", args.grid},
                                                {"group_by", args.group_by},
                                                {"permute", args.permute},
                                                {"common", common_json(common)}});
  report["correlation"] = groups;
  if (!args.report.empty()) write_json(args.report, report);
  for (const auto& g : summary.groups) {
    out << group_label(g) << "\tn=" << g.n << "\trho=" << g.spearman_rho << "\tp=" << g.p_spearman
        << "\tr=" << g.pearson_r << "\tp=" << g.p_pearson << '\n';
  }
  for (const auto& s : summary.skipped) out << "skipped\t" << s << '\n';
  return 0;
}

int run_build_xanlg(const CommonArgs& common, const BuildXanlgArgs& args, std::ostream& out) {
  auto sets_spec = parse_assignments(args.set, "--set");
  auto dict_spec = parse_assignments(args.dict, "--dict");
  require_nonempty_flag(args.out, "--out");

  std::vector<MonolingualAnalogySet> sets;
  for (const auto& s : sets_spec) sets.push_back(read_monolingual_set(s.path, s.key));
  DictionarySet dictionaries;
  for (const auto& d : dict_spec) {
    auto dash = d.key.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == d.key.size()) {
      throw ValidationError("--dict key must be <src>-<tgt>, got '" + d.key + "'");
    }
    std::string src = d.key.substr(0, dash), tgt = d.key.substr(dash + 1);
    dictionaries[{src, tgt}] = read_muse_dictionary(d.path, src, tgt);
  }

  auto result = build_corpus(sets, dictionaries, args.min_pairs);
  write_analogy_dir(args.out, result.corpus);

  Json categories = Json::array();
  for (const auto& c : result.report.categories) {
    Json stages = Json::array();
    for (const auto& s : c.stages) {
      stages.push_back(Json{{"language", s.language},
                            {"input_rows", s.input_rows},
                            {"translated", s.translated},
                            {"coincided", s.coincided},
                            {"ambiguous", s.ambiguous}});
    }
    categories.push_back(Json{{"name", c.name},
                              {"source_pairs", c.source_pairs},
                              {"stages", stages},
                              {"aligned", c.aligned},
                              {"kept", c.kept},
                              {"reason", c.reason}});
  }
  Json report = report_header("build-xanlg", Json{{"set", args.set},
                                                  {"dict", args.dict},
                                                  {"min_pairs", args.min_pairs},
                                                  {"out", args.out},
                                                  {"common", common_json(common)}});
  report["pivot"] = result.report.pivot;
  report["categories"] = categories;
  write_json(args.report.empty() ? fs::path(args.out) / "report.json" : fs::path(args.report), report);
  for (const auto& c : result.report.categories) {
    out << c.name << '\t' << (c.kept ? "kept" : "dropped") << '\t' << c.aligned;
    if (!c.kept) out << '\t' << c.reason;
    out << '\n';
  }
  return 0;
}

int run_verify_pae(const CommonArgs& common, const VerifyPaeArgs& args, std::ostream& out) {
  auto spec = parse_assignment(args.emb, "--emb");
  CostKind cost = parse_cost_kind(args.cost);
  auto category = find_category(read_analogy_dir(args.analogy), args.category);
  if (!category.has_language(spec.key)) {
    throw ValidationError("category " + args.category + " has no '" + spec.key + "' column");
  }
  std::vector<WordPair> pairs = category.pairs(spec.key);
  if (args.pairs) {
    if (*args.pairs < 1) throw ValidationError("--pairs must be at least 1");
    if (*args.pairs < pairs.size()) pairs.resize(*args.pairs);
  }
  if (2 * pairs.size() > args.cap) {
    throw ValidationError("category " + args.category + " has " + std::to_string(2 * pairs.size()) +
                          " vectors, above --cap " + std::to_string(args.cap) +
                          "; select a subset with --pairs");
  }

  auto cache = EmbeddingCache::from_environment();
  Embedding embedding = load_embedding(cache, spec, args.limit);
  std::vector<Vector> vectors;
  std::vector<std::string> words;
  std::vector<WordPair> used;
  for (const auto& pair : pairs) {
    if (embedding.contains(pair.first) && embedding.contains(pair.second)) used.push_back(pair);
  }
  if (used.size() < 2) throw ValidationError("fewer than 2 in-vocabulary pairs to verify");
  Matching reference;
  for (const auto& p : used) words.push_back(p.first);
  for (const auto& p : used) words.push_back(p.second);
  for (const auto& w : words) vectors.push_back(embedding.row(*embedding.find(w)).transpose());
  for (std::size_t i = 0; i < used.size(); ++i) reference.emplace_back(i, used.size() + i);

  VerifyOptions options;
  options.cap = args.cap;
  options.jobs = common.jobs;
  options.p_star.seed = common.seed;
  auto verdict = verify_best_pairing(vectors, reference, cost, options);

  auto matching_json = [&](const Matching& m) {
    Json out_pairs = Json::array();
    for (auto [i, j] : m) out_pairs.push_back(Json::array({words[i], words[j]}));
    return out_pairs;
  };
  Json ranked = Json::array();
  for (std::size_t k = 0; k < verdict.ranked.size() && k < args.top; ++k) {
    const auto& r = verdict.ranked[k];
    ranked.push_back(Json{{"cost", r.cost}, {"is_reference", r.is_reference}, {"pairs", matching_json(r.matching)}});
  }
  Json report = report_header("verify-pae", Json{{"emb", args.emb},
                                                 {"analogy", args.analogy},
                                                 {"category", args.category},
                                                 {"cost", to_string(cost)},
                                                 {"cap", args.cap},
                                                 {"pairs", optional_json(args.pairs)},
                                                 {"limit", optional_json(args.limit)},
                                                 {"top", args.top},
                                                 {"common", common_json(common)}});
  report["result"] = Json{{"is_optimal", verdict.is_optimal},
                          {"reference_cost", verdict.reference_cost},
                          {"ties", verdict.ties},
                          {"matchings", verdict.ranked.size()},
                          {"reference", matching_json(reference)},
                          {"ranked", ranked}};
  if (!args.report.empty()) write_json(args.report, report);
  out << (verdict.is_optimal ? "optimal" : "not optimal") << "\treference cost "
      << verdict.reference_cost << "\tties " << verdict.ties << "\tmatchings " << verdict.ranked.size()
      << '\n';
  return 0;
}

namespace {

SynthSpec parse_synth_spec(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  if (!j.is_object()) throw ValidationError(path.string() + ": spec must be a JSON object");
  static const std::set<std::string> known{"n_pairs", "dim",      "noise_sigma",   "distortion", "seed",
                                           "fillers", "language", "offset_length", "category"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw ValidationError(path.string() + ": unknown spec field '" + key + "'");
  }
  SynthSpec spec;
  try {
    if (j.contains("n_pairs")) spec.n_pairs = j["n_pairs"].get<std::size_t>();
    if (j.contains("dim")) spec.dim = j["dim"].get<std::size_t>();
    if (j.contains("noise_sigma")) spec.noise_sigma = j["noise_sigma"].get<double>();
    if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("fillers")) spec.fillers = j["fillers"].get<std::size_t>();
    if (j.contains("offset_length")) spec.offset_length = j["offset_length"].get<double>();
    if (j.contains("language")) spec.language = j["language"].get<std::string>();
    if (j.contains("category")) spec.category = j["category"].get<std::string>();
    if (j.contains("distortion")) {
      const auto& d = j["distortion"];
      if (d.is_string()) {
        spec.distortion.kind = parse_distortion_kind(d.get<std::string>());
      } else if (d.is_object()) {
        spec.distortion.kind = parse_distortion_kind(d.at("kind").get<std::string>());
        if (d.contains("lambda")) spec.distortion.lambda = d["lambda"].get<double>();
        if (d.contains("angle")) spec.distortion.angle = d["angle"].get<double>();
      } else {
        throw ValidationError(path.string() + ": distortion must be a string or an object");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  return spec;
}

Json spec_json(const SynthSpec& s) {
  return Json{{"n_pairs", s.n_pairs},
              {"dim", s.dim},
              {"noise_sigma", s.noise_sigma},
              {"distortion",
               {{"kind", to_string(s.distortion.kind)}, {"lambda", s.distortion.lambda}, {"angle", s.distortion.angle}}},
              {"seed", s.seed},
              {"fillers", s.fillers},
              {"offset_length", s.offset_length},
              {"language", s.language},
              {"category", s.category}};
}

}  // namespace

int run_synth(const CommonArgs& common, const SynthArgs& args, std::ostream& out) {
  SynthSpec spec = parse_synth_spec(args.spec);
  require_nonempty_flag(args.out, "--out");
  std::vector<double> levels;
  if (!args.sweep.empty()) {
    auto eq = args.sweep.find('=');
    std::string key = eq == std::string::npos ? "" : args.sweep.substr(0, eq);
    if (key != "lambda" && key != "level") {
      throw ValidationError("--sweep expects lambda=start:stop:step, got '" + args.sweep + "'");
    }
    levels = parse_sweep_range(args.sweep.substr(eq + 1));
  }
  DistortionKind family = parse_distortion_kind(args.family);

  SweepOptions options;
  options.jobs = common.jobs;
  options.lrcos.seed = common.seed;
  std::vector<SweepRow> rows;
  if (levels.empty()) {
    auto base = gen_analogy_space(spec);
    SweepRow row = evaluate_distortion(base, spec.distortion, Rng::derive(spec.seed, 100), options);
    rows.push_back(row);
  } else {
    rows = theorem_sweep(spec, family, levels, options);
  }
  {
    auto csv = open_output(args.out);
    write_sweep_csv(csv, rows);
  }

  Json correlation = nullptr;
  if (rows.size() >= 3) {
    std::vector<double> lmp, pae;
    for (const auto& r : rows) {
      lmp.push_back(r.s_lmp);
      pae.push_back(r.s_pae);
    }
    auto rho = spearman_rho(lmp, pae);
    auto r = pearson_r(lmp, pae);
    correlation = Json{{"spearman_rho", rho.coefficient},
                       {"p_spearman", rho.p_value},
                       {"pearson_r", r.coefficient},
                       {"p_pearson", r.p_value}};
  }
  Json report = report_header("synth", Json{{"spec", spec_json(spec)},
                                            {"sweep", args.sweep},
                                            {"family", to_string(family)},
                                            {"out", args.out},
                                            {"common", common_json(common)}});
  report["points"] = rows.size();
  report["correlation"] = correlation;
  if (!args.report.empty()) write_json(args.report, report);
  out << rows.size() << " sweep rows written to " << args.out << '\n';
  if (!correlation.is_null()) {
    out << "spearman rho " << correlation["spearman_rho"].get<double>() << " (p "
        << correlation["p_spearman"].get<double>() << ")\n";
  }
  return 0;
}

}  // namespace anlgmap::cli
