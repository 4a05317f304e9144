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

#include "anlgmap/cli.hpp"

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <iostream>
#include <memory>

#include "anlgmap/error.hpp"
#include "anlgmap/parallel.hpp"
#include "commands.hpp"

namespace anlgmap::cli {

namespace {

const std::vector<std::string> kLogLevels{"trace", "debug", "info", "warn", "error", "off"};

void configure_logging(const std::string& level, std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto logger = std::make_shared<spdlog::logger>("anlgmap", sink);
  logger->set_pattern("[%l] %v");
  logger->set_level(spdlog::level::from_str(level));
  spdlog::set_default_logger(logger);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analogy preservation and linear mapping indicators for cross-lingual embeddings",
               "anlgmap"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonArgs common;
  common.jobs = default_jobs();
  app.add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--log-level", common.log_level, "Log level")->check(CLI::IsMember(kLogLevels));
  app.add_option("--seed", common.seed, "Random seed");

  FitMapArgs fit;
  auto* fit_cmd = app.add_subcommand("fit-map", "Fit the best linear map between two embeddings");
  fit_cmd->add_option("--emb-x", fit.emb_x, "Source embedding, lang=path")->required();
  fit_cmd->add_option("--emb-y", fit.emb_y, "Target embedding, lang=path")->required();
  fit_cmd->add_option("--dict", fit.dict, "MUSE dictionary")->check(CLI::ExistingFile);
  fit_cmd->add_option("--analogy", fit.analogy, "Analogy corpus directory")->check(CLI::ExistingDirectory);
  fit_cmd->add_option("--category", fit.category, "Restrict rows to one category");
  fit_cmd->add_option("--limit", fit.limit, "Vocabulary cap per embedding");
  fit_cmd->add_option("--report", fit.report, "JSON report path");

  AnalogyEvalArgs eval;
  auto* eval_cmd = app.add_subcommand("analogy-eval", "Score analogy categories");
  eval_cmd->add_option("--emb", eval.emb, "Embedding, lang=path (repeatable)")->required();
  eval_cmd->add_option("--analogy", eval.analogy, "Analogy corpus directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  eval_cmd->add_option("--category", eval.category, "Only this category");
  eval_cmd->add_option("--solver", eval.solver, "lrcos|3cosadd|3cosmul|pairdist")
      ->check(CLI::IsMember({"lrcos", "3cosadd", "3cosmul", "pairdist"}));
  eval_cmd->add_option("--limit", eval.limit, "Vocabulary cap per embedding");
  eval_cmd->add_option("--report", eval.report, "JSON report path");

  IndicatorsArgs ind;
  auto* ind_cmd = app.add_subcommand("indicators", "Compute S_LMP and S_PAE for every language pair");
  ind_cmd->add_option("--emb", ind.emb, "Embedding, lang=path (repeatable)")->required();
  ind_cmd->add_option("--analogy", ind.analogy, "Analogy corpus directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  ind_cmd->add_option("--series", ind.series, "Series label for the grid rows");
  ind_cmd->add_option("--limit", ind.limit, "Vocabulary cap per embedding");
  ind_cmd->add_option("--out", ind.out, "Grid CSV path");
  ind_cmd->add_option("--report", ind.report, "JSON report path");

  CorrelateArgs cor;
  auto* cor_cmd = app.add_subcommand("correlate", "Correlate S_LMP with S_PAE over grid rows");
  cor_cmd->add_option("--grid", cor.grid, "Grid CSV (repeatable)")->required()->check(CLI::ExistingFile);
  cor_cmd->add_option("--group-by", cor.group_by, "Comma-separated subset of series,category,kind");
  cor_cmd->add_option("--permute", cor.permute, "Permutation test rounds");
  cor_cmd->add_option("--report", cor.report, "JSON report path");

  BuildXanlgArgs build;
  auto* build_cmd = app.add_subcommand("build-xanlg", "Build a multilingual analogy corpus");
  build_cmd->add_option("--set", build.set, "Monolingual analogy set, lang=path (repeatable)")->required();
  build_cmd->add_option("--dict", build.dict, "Dictionary, src-tgt=path (repeatable)")->required();
  build_cmd->add_option("--min-pairs", build.min_pairs, "Minimum aligned pairs per category");
  build_cmd->add_option("--out", build.out, "Output corpus directory")->required();
  build_cmd->add_option("--report", build.report, "JSON report path (default <out>/report.json)");

  VerifyPaeArgs ver;
  auto* ver_cmd = app.add_subcommand("verify-pae", "Check that a category's pairing has the lowest transport cost");
  ver_cmd->add_option("--emb", ver.emb, "Embedding, lang=path")->required();
  ver_cmd->add_option("--analogy", ver.analogy, "Analogy corpus directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  ver_cmd->add_option("--category", ver.category, "Category name")->required();
  ver_cmd->add_option("--cost", ver.cost, "euclidean|taxicab|cosine")
      ->check(CLI::IsMember({"euclidean", "taxicab", "cosine"}));
  ver_cmd->add_option("--cap", ver.cap, "Largest vector count to enumerate");
  ver_cmd->add_option("--pairs", ver.pairs, "Use only the first N pairs");
  ver_cmd->add_option("--limit", ver.limit, "Vocabulary cap");
  ver_cmd->add_option("--top", ver.top, "Ranked matchings to report");
  ver_cmd->add_option("--report", ver.report, "JSON report path");

  SynthArgs syn;
  auto* syn_cmd = app.add_subcommand("synth", "Synthetic spaces and distortion sweeps");
  syn_cmd->add_option("--spec", syn.spec, "Synthetic space spec (JSON)")->required()->check(CLI::ExistingFile);
  syn_cmd->add_option("--sweep", syn.sweep, "Distortion levels, lambda=start:stop:step");
  syn_cmd->add_option("--family", syn.family, "radial|split_linear")
      ->check(CLI::IsMember({"radial", "split_linear"}));
  syn_cmd->add_option("--out", syn.out, "Sweep CSV path");
  syn_cmd->add_option("--report", syn.report, "JSON report path");

  if (!args.empty() && !args.front().empty() && args.front().front() != '-') {
    bool known = false;
    for (const auto* sub : app.get_subcommands({})) known = known || sub->get_name() == args.front();
    if (!known) {
      err << "error: unknown subcommand '" << args.front() << "'\n\n" << app.help();
      return kExitValidation;
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  configure_logging(common.log_level, err);
  try {
    if (*fit_cmd) return run_fit_map(common, fit, out);
    if (*eval_cmd) return run_analogy_eval(common, eval, out);
    if (*ind_cmd) return run_indicators(common, ind, out);
    if (*cor_cmd) return run_correlate(common, cor, out);
    if (*build_cmd) return run_build_xanlg(common, build, out);
    if (*ver_cmd) return run_verify_pae(common, ver, out);
    if (*syn_cmd) return run_synth(common, syn, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  err << app.help();
  return kExitValidation;
}

int dispatch(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return dispatch(args, std::cout, std::cerr);
}

}  // namespace anlgmap::cli
