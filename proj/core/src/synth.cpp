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

#include "anlgmap/synth.hpp"

#include <Eigen/QR>

#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>

#include "anlgmap/error.hpp"
#include "anlgmap/parallel.hpp"
#include "anlgmap/rng.hpp"
#include "anlgmap/text.hpp"

namespace anlgmap {

std::string to_string(DistortionKind kind) {
  switch (kind) {
    case DistortionKind::none: return "none";
    case DistortionKind::radial: return "radial";
    case DistortionKind::split_linear: return "split_linear";
  }
  return "?";
}

DistortionKind parse_distortion_kind(std::string_view text) {
  if (text == "none") return DistortionKind::none;
  if (text == "radial") return DistortionKind::radial;
  if (text == "split_linear" || text == "split") return DistortionKind::split_linear;
  throw ValidationError("unknown distortion '" + std::string(text) + "'");
}

namespace {

Vector gaussian(Rng& rng, Eigen::Index n) {
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.normal();
  return v;
}

}  // namespace

SynthSpace gen_analogy_space(const SynthSpec& spec) {
  if (spec.n_pairs < 2) throw ValidationError("synthetic space needs at least 2 pairs");
  if (spec.dim < 2) throw ValidationError("synthetic space needs dimension >= 2");
  if (!(spec.noise_sigma >= 0.0)) throw ValidationError("noise_sigma must be non-negative");
  if (!(spec.offset_length > 0.0)) throw ValidationError("offset_length must be positive");

  const auto d = static_cast<Eigen::Index>(spec.dim);
  const std::size_t t = spec.n_pairs;
  const std::size_t fillers = spec.fillers ? spec.fillers : 10 * t;
  Rng rng(Rng::derive(spec.seed, 0));

  Vector half_offset = Vector::Zero(d);
  half_offset(0) = spec.offset_length / 2.0;

  Matrix words(static_cast<Eigen::Index>(2 * t), d);
  for (std::size_t i = 0; i < t; ++i) {
    Vector centre = Vector::Zero(d);
    centre.tail(d - 1) = gaussian(rng, d - 1).normalized();
    words.row(static_cast<Eigen::Index>(i)) = (centre - half_offset).transpose();
    words.row(static_cast<Eigen::Index>(t + i)) = (centre + half_offset).transpose();
  }
  Rng noise_rng(Rng::derive(spec.seed, 1));
  for (std::size_t i = 0; i < t; ++i) {
    words.row(static_cast<Eigen::Index>(t + i)) +=
        spec.noise_sigma * gaussian(noise_rng, d).transpose();
  }

  const double radius = std::sqrt(1.0 + half_offset(0) * half_offset(0));
  Matrix unit_words = unit_normalize_rows(words);
  Rng filler_rng(Rng::derive(spec.seed, 2));
  Matrix filler_rows(static_cast<Eigen::Index>(fillers), d);
  for (std::size_t k = 0; k < fillers; ++k) {
    Vector best;
    double best_cos = 2.0;
    for (int attempt = 0; attempt < 1000 && best_cos > 0.5; ++attempt) {
      Vector v = gaussian(filler_rng, d).normalized();
      double max_cos = (unit_words * v).maxCoeff();
      if (max_cos < best_cos) {
        best_cos = max_cos;
        best = v;
      }
    }
    filler_rows.row(static_cast<Eigen::Index>(k)) = radius * best.transpose();
  }

  std::vector<std::string> vocab;
  std::vector<WordPair> pairs;
  for (std::size_t i = 0; i < t; ++i) vocab.push_back("a" + std::to_string(i));
  for (std::size_t i = 0; i < t; ++i) vocab.push_back("b" + std::to_string(i));
  for (std::size_t k = 0; k < fillers; ++k) vocab.push_back("f" + std::to_string(k));
  for (std::size_t i = 0; i < t; ++i) pairs.push_back({vocab[i], vocab[t + i]});

  Matrix matrix(words.rows() + filler_rows.rows(), d);
  matrix << words, filler_rows;
  return {Embedding(spec.language, std::move(vocab), std::move(matrix)),
          AnalogyCategory(spec.category, AnalogyKind::semantic, {{spec.language, pairs}})};
}

Embedding apply_affine(const Embedding& embedding, const Matrix& m, const Vector& b) {
  if (static_cast<std::size_t>(m.cols()) != embedding.dim() || m.rows() != b.size() || m.rows() == 0) {
    throw ValidationError("affine map shape does not match the embedding dimension");
  }
  Matrix mapped = (embedding.matrix() * m.transpose()).rowwise() + b.transpose();
  return Embedding(embedding.language(), embedding.vocab(), std::move(mapped));
}

Embedding apply_distortion(const Embedding& embedding, const Distortion& distortion) {
  Matrix out = embedding.matrix();
  switch (distortion.kind) {
    case DistortionKind::none:
      break;
    case DistortionKind::radial: {
      if (!(distortion.lambda >= 0.0)) throw ValidationError("radial lambda must be >= 0");
      for (Eigen::Index i = 0; i < out.rows(); ++i) {
        out.row(i) *= 1.0 + distortion.lambda * out.row(i).squaredNorm();
      }
      break;
    }
    case DistortionKind::split_linear: {
      if (!std::isfinite(distortion.angle)) throw ValidationError("split_linear angle must be finite");
      const double c = std::cos(distortion.angle);
      const double s = std::sin(distortion.angle);
      const Eigen::Index d = out.cols();
      for (Eigen::Index i = 0; i < out.rows(); ++i) {
        if (out(i, 0) < 0.0) continue;
        auto rotate = [&](Eigen::Index p, Eigen::Index q) {
          double u = out(i, p);
          double v = out(i, q);
          out(i, p) = c * u - s * v;
          out(i, q) = s * u + c * v;
        };
        if (d < 3) {
          rotate(0, 1);
        } else {
          for (Eigen::Index p = 1; p + 1 < d; p += 2) rotate(p, p + 1);
        }
      }
      break;
    }
  }
  return Embedding(embedding.language(), embedding.vocab(), std::move(out));
}

Matrix random_orthogonal(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  const auto n = static_cast<Eigen::Index>(dim);
  Matrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = rng.normal();
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    if (r(k, k) < 0) q.col(k) *= -1.0;
  }
  return q;
}

Distortion distortion_at(DistortionKind family, double level) {
  switch (family) {
    case DistortionKind::none: return Distortion::none();
    case DistortionKind::radial: return Distortion::radial(level);
    case DistortionKind::split_linear: return Distortion::split_linear(level * std::numbers::pi / 2.0);
  }
  return Distortion::none();
}

namespace {

double lrcos_accuracy(const Embedding& embedding, const AnalogyCategory& category,
                      const LRCosConfig& config) {
  EvalOptions eval;
  eval.solver = SolverKind::lrcos;
  eval.lrcos = config;
  return category_accuracy(embedding, category, eval).accuracy;
}

AnalogyCategory relabel(const AnalogyCategory& category, const std::string& from,
                        const std::string& to) {
  return AnalogyCategory(category.name(), category.kind(), {{to, category.pairs(from)}});
}

}  // namespace

SweepRow evaluate_distortion(const SynthSpace& base, const Distortion& distortion,
                             std::uint64_t point_seed, const SweepOptions& options,
                             std::optional<double> lrcos_x) {
  const Embedding& x = base.embedding;
  const std::string target_language = x.language() + "_y";
  Embedding distorted = apply_distortion(x, distortion);
  Matrix rotation = random_orthogonal(x.dim(), Rng::derive(point_seed, 1));
  Embedding y_space = apply_affine(distorted, rotation, Vector::Zero(static_cast<Eigen::Index>(x.dim())));
  Embedding y(target_language, y_space.vocab(), y_space.matrix());
  AnalogyCategory y_category = relabel(base.category, x.language(), target_language);

  SweepRow row;
  row.distortion = distortion;
  LRCosConfig config = options.lrcos;
  if (!lrcos_x) lrcos_x = lrcos_accuracy(x, base.category, config);
  config.seed = Rng::derive(point_seed, 2);
  row.lrcos_x = *lrcos_x;
  row.lrcos_y = lrcos_accuracy(y, y_category, config);
  row.s_pae = s_pae(row.lrcos_x, row.lrcos_y);

  // Y reuses X's tokens, so the category doubles as an identity dictionary.
  BilingualDictionary dictionary{x.language(), target_language, {}};
  for (const auto& pair : base.category.pairs(x.language())) {
    dictionary.add(pair.first, pair.first);
    dictionary.add(pair.second, pair.second);
  }
  auto aligned = build_aligned(x, y, dictionary);
  row.s_lmp = fit_linear_gd(aligned, options.gd).s_lmp;
  return row;
}

std::vector<SweepRow> theorem_sweep(const SynthSpec& spec, DistortionKind family,
                                    const std::vector<double>& levels,
                                    const SweepOptions& options) {
  if (levels.size() < 10) throw ValidationError("a sweep needs at least 10 levels");
  SynthSpace base = gen_analogy_space(spec);
  LRCosConfig x_config = options.lrcos;
  x_config.seed = Rng::derive(spec.seed, 3);
  double lrcos_x = lrcos_accuracy(base.embedding, base.category, x_config);

  std::vector<SweepRow> rows(levels.size());
  parallel_for(levels.size(), options.jobs, [&](std::size_t i) {
    std::uint64_t point_seed = Rng::derive(spec.seed, 100 + i);
    rows[i] = evaluate_distortion(base, distortion_at(family, levels[i]), point_seed, options, lrcos_x);
    rows[i].level = levels[i];
  });
  return rows;
}

std::vector<double> parse_sweep_range(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.size() != 3) throw ValidationError("sweep range must be start:stop:step");
  double v[3];
  for (int k = 0; k < 3; ++k) {
    auto [ptr, ec] = std::from_chars(parts[k].data(), parts[k].data() + parts[k].size(), v[k]);
    if (ec != std::errc() || ptr != parts[k].data() + parts[k].size() || !std::isfinite(v[k])) {
      throw ValidationError("bad number in sweep range '" + text + "'");
    }
  }
  const double start = v[0], stop = v[1], step = v[2];
  if (!(step > 0.0) || !(stop > start)) throw ValidationError("sweep range needs stop > start and step > 0");
  std::vector<double> levels;
  for (std::size_t k = 0;; ++k) {
    double level = start + static_cast<double>(k) * step;
    if (level >= stop - 1e-9 * step) break;
    levels.push_back(level);
  }
  return levels;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  auto number = [](double value) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, ptr);
  };
  out << "level,distortion,lambda,angle,s_lmp,lrcos_x,lrcos_y,s_pae\n";
  for (const auto& r : rows) {
    out << number(r.level) << ',' << to_string(r.distortion.kind) << ',' << number(r.distortion.lambda)
        << ',' << number(r.distortion.angle) << ',' << number(r.s_lmp) << ',' << number(r.lrcos_x)
        << ',' << number(r.lrcos_y) << ',' << number(r.s_pae) << '\n';
  }
}

}  // namespace anlgmap
