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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace anlgmap::cli {

struct CommonArgs {
  std::size_t jobs = 1;
  std::string log_level = "warn";
  std::uint64_t seed = 0;
};

struct FitMapArgs {
  std::string emb_x;  // lang=path
  std::string emb_y;
  std::string dict;
  std::string analogy;
  std::string category;
  std::optional<std::size_t> limit;
  std::string report;
};

struct AnalogyEvalArgs {
  std::vector<std::string> emb;
  std::string analogy;
  std::string category;
  std::string solver = "lrcos";
  std::optional<std::size_t> limit;
  std::string report;
};

struct IndicatorsArgs {
  std::vector<std::string> emb;
  std::string analogy;
  std::string series = "default";
  std::optional<std::size_t> limit;
  std::string out = "grid.csv";
  std::string report;
};

struct CorrelateArgs {
  std::vector<std::string> grid;
  std::string group_by = "series,category";
  std::size_t permute = 0;
  std::string report;
};

struct BuildXanlgArgs {
  std::vector<std::string> set;
  std::vector<std::string> dict;
  std::size_t min_pairs = 30;
  std::string out;
  std::string report;
};

struct VerifyPaeArgs {
  std::string emb;
  std::string analogy;
  std::string category;
  std::string cost = "euclidean";
  std::size_t cap = 12;
  std::optional<std::size_t> pairs;
  std::optional<std::size_t> limit;
  std::size_t top = 10;
  std::string report;
};

struct SynthArgs {
  std::string spec;
  std::string sweep;
  std::string family = "split_linear";
  std::string out = "sweep.csv";
  std::string report;
};

int run_fit_map(const CommonArgs& common, const FitMapArgs& args, std::ostream& out);
int run_analogy_eval(const CommonArgs& common, const AnalogyEvalArgs& args, std::ostream& out);
int run_indicators(const CommonArgs& common, const IndicatorsArgs& args, std::ostream& out);
int run_correlate(const CommonArgs& common, const CorrelateArgs& args, std::ostream& out);
int run_build_xanlg(const CommonArgs& common, const BuildXanlgArgs& args, std::ostream& out);
int run_verify_pae(const CommonArgs& common, const VerifyPaeArgs& args, std::ostream& out);
int run_synth(const CommonArgs& common, const SynthArgs& args, std::ostream& out);

}  // namespace anlgmap::cli
