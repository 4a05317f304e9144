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

#include "anlgmap/analogy.hpp"
#include "anlgmap/embedding.hpp"
#include "anlgmap/linear_map.hpp"
#include "anlgmap/stats.hpp"

namespace anlgmap {

enum class DistortionKind { none, radial, split_linear };

// radial:       x -> x * (1 + lambda * |x|^2)
// split_linear: points with x_0 >= 0 are rotated by `angle` (radians) in each
//               coordinate plane (1,2), (3,4), ...; the rest stay fixed.
struct Distortion {
  DistortionKind kind = DistortionKind::none;
  double lambda = 0.0;
  double angle = 0.0;

  static Distortion none() { return {}; }
  static Distortion radial(double lambda) { return {DistortionKind::radial, lambda, 0.0}; }
  static Distortion split_linear(double angle) {
    return {DistortionKind::split_linear, 0.0, angle};
  }
};

std::string to_string(DistortionKind kind);
DistortionKind parse_distortion_kind(std::string_view text);

struct SynthSpec {
  std::size_t n_pairs = 30;
  std::size_t dim = 32;
  double noise_sigma = 0.0;
  Distortion distortion;
  std::uint64_t seed = 0;
  // Filler (non-category) vocabulary size; defaults to 10 per pair.
  std::size_t fillers = 0;
  // Length of the shared offset r, with category centres at unit length.
  double offset_length = 1.0;
  std::string language = "sx";
  std::string category = "SYN";
};

struct SynthSpace {
  Embedding embedding;
  AnalogyCategory category;
};

// Pair i is (c_i - r/2, c_i + r/2 + noise_i): unit centres c_i orthogonal to
// the shared offset r = offset_length * e_0, so with zero noise every word has
// the same norm and unit-normalising keeps each parallelogram exact. Fillers
// are random vectors of the same norm, resampled while closer than 0.5 in
// cosine to any category word. Words are a<i>, b<i>, f<k>.
SynthSpace gen_analogy_space(const SynthSpec& spec);

// Maps every row x to m * x + b.
Embedding apply_affine(const Embedding& embedding, const Matrix& m, const Vector& b);

Embedding apply_distortion(const Embedding& embedding, const Distortion& distortion);

// Uniformly random rotation (Haar) of the given size.
Matrix random_orthogonal(std::size_t dim, std::uint64_t seed);

// X keeps its generated role in every row; S_PAE is symmetric anyway.
struct SweepRow {
  double level = 0.0;
  Distortion distortion;
  double s_lmp = 0.0;
  double lrcos_x = 0.0;
  double lrcos_y = 0.0;
  double s_pae = 0.0;
};

struct SweepOptions {
  LRCosConfig lrcos;
  GDConfig gd;
  std::size_t jobs = 1;
};

// One comparison of X = gen_analogy_space(spec) against a random rotation of
// apply_distortion(X, distortion). `lrcos_x` may be supplied when already
// known for X.
SweepRow evaluate_distortion(const SynthSpace& base, const Distortion& distortion,
                             std::uint64_t point_seed, const SweepOptions& options,
                             std::optional<double> lrcos_x = std::nullopt);

// Maps a level in [0, 1] to the family's parameter: split_linear angle =
// level * pi / 2, radial lambda = level.
Distortion distortion_at(DistortionKind family, double level);

// For each level: X is gen_analogy_space(spec); Y is a random rotation of
// apply_distortion(X, distortion_at(family, level)). S_LMP maps X onto Y over
// both words of every pair; S_PAE combines the LRCos accuracies of X and Y.
// The base space is shared by all levels; rotations and LRCos sampling use
// sub-seeds derived from (spec.seed, level index).
std::vector<SweepRow> theorem_sweep(const SynthSpec& spec, DistortionKind family,
                                    const std::vector<double>& levels,
                                    const SweepOptions& options = {});

// "start:stop:step", stop exclusive.
std::vector<double> parse_sweep_range(const std::string& text);

// Fixed header: level,distortion,lambda,angle,s_lmp,lrcos_x,lrcos_y,s_pae
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace anlgmap
