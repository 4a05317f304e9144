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

#include "anlgmap/linear_map.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <fstream>
#include <set>

#include "anlgmap/error.hpp"
#include "anlgmap/text.hpp"

namespace anlgmap {

bool BilingualDictionary::add(std::string source, std::string target) {
  for (const auto& [s, t] : entries) {
    if (s == source && t == target) return false;
  }
  entries.emplace_back(std::move(source), std::move(target));
  return true;
}

BilingualDictionary BilingualDictionary::inverted() const {
  BilingualDictionary out{target_lang, source_lang, {}};
  out.entries.reserve(entries.size());
  for (const auto& [s, t] : entries) out.entries.emplace_back(t, s);
  return out;
}

BilingualDictionary read_muse_dictionary(const std::filesystem::path& path,
                                         std::string source_lang, std::string target_lang) {
  const std::string file = path.string();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open dictionary " + file);
  BilingualDictionary dict{std::move(source_lang), std::move(target_lang), {}};
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto text = rstrip(line);
    if (text.empty()) continue;
    auto sep = text.find_first_of("\t ");
    if (sep == std::string_view::npos) throw ParseError(file, line_no, "expected '<source> <target>'");
    auto source = text.substr(0, sep);
    auto target = text.substr(sep + 1);
    auto start = target.find_first_not_of("\t ");
    if (start == std::string_view::npos || source.empty()) {
      throw ParseError(file, line_no, "expected '<source> <target>'");
    }
    target = target.substr(start);
    std::pair<std::string, std::string> entry{nfc(source), nfc(target)};
    if (seen.insert(entry).second) dict.entries.push_back(std::move(entry));
  }
  if (dict.entries.empty()) throw ValidationError("dictionary " + file + " is empty");
  return dict;
}

BilingualDictionary dictionary_from_category(const AnalogyCategory& category,
                                             const std::string& source_lang,
                                             const std::string& target_lang) {
  const auto& xs = category.pairs(source_lang);
  const auto& ys = category.pairs(target_lang);
  BilingualDictionary dict{source_lang, target_lang, {}};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    dict.add(xs[i].first, ys[i].first);
    dict.add(xs[i].second, ys[i].second);
  }
  return dict;
}

void preprocess(AlignedMatrixPair& pair) {
  pair.x = frobenius_normalize(mean_center(pair.x));
  pair.y = frobenius_normalize(mean_center(pair.y));
  pair.preprocessed = true;
}

AlignedMatrixPair build_aligned(const Embedding& x, const Embedding& y,
                                const BilingualDictionary& dictionary,
                                const std::unordered_set<std::string>* word_filter) {
  if (dictionary.source_lang != x.language() || dictionary.target_lang != y.language()) {
    throw ValidationError("dictionary " + dictionary.source_lang + "-" + dictionary.target_lang +
                          " does not match embeddings " + x.language() + "-" + y.language());
  }
  std::vector<std::pair<std::size_t, std::size_t>> rows;
  AlignedMatrixPair pair;
  for (const auto& [source, target] : dictionary.entries) {
    if (word_filter && (!word_filter->contains(source) || !word_filter->contains(target))) continue;
    auto sx = x.find(source);
    auto ty = y.find(target);
    if (!sx || !ty) continue;
    rows.emplace_back(*sx, *ty);
    pair.row_words.emplace_back(source, target);
  }
  if (rows.empty()) {
    throw ValidationError("no dictionary entry " + dictionary.source_lang + "-" +
                          dictionary.target_lang + " survives the vocabulary filter");
  }
  pair.x.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(x.dim()));
  pair.y.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(y.dim()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    pair.x.row(static_cast<Eigen::Index>(i)) = x.row(rows[i].first);
    pair.y.row(static_cast<Eigen::Index>(i)) = y.row(rows[i].second);
  }
  preprocess(pair);
  return pair;
}

double fit_residual(const AlignedMatrixPair& pair, const Matrix& mapping) {
  return (pair.x * mapping.transpose() - pair.y).norm();
}

namespace {

void require_preprocessed(const AlignedMatrixPair& pair) {
  if (!pair.preprocessed) throw ValidationError("linear fit needs a preprocessed matrix pair");
  if (pair.x.rows() == 0 || pair.x.rows() != pair.y.rows()) {
    throw ValidationError("linear fit needs row-aligned, non-empty matrices");
  }
}

}  // namespace

LinearFit fit_linear_gd(const AlignedMatrixPair& pair, const GDConfig& config) {
  require_preprocessed(pair);
  const Matrix& x = pair.x;
  const Matrix& y = pair.y;
  // Working on M^T (d_x x d_y) keeps the products column-major friendly.
  Matrix mt = Matrix::Identity(x.cols(), y.cols());
  Matrix velocity = Matrix::Zero(x.cols(), y.cols());
  const Matrix xtx = x.transpose() * x;
  const Matrix xty = x.transpose() * y;

  auto loss_of = [&](const Matrix& m) { return (x * m - y).squaredNorm(); };

  double rate = config.learning_rate;
  double loss = loss_of(mt);
  std::size_t since_restart = 0;
  LinearFit fit;
  for (std::size_t it = 1; it <= config.max_iterations; ++it) {
    fit.iterations = it;
    if (loss == 0.0) {
      fit.converged = true;
      break;
    }
    double beta = config.accelerate ? static_cast<double>(since_restart) /
                                          static_cast<double>(since_restart + 3)
                                    : 0.0;
    Matrix lookahead = mt + beta * velocity;
    Matrix gradient = 2.0 * (xtx * lookahead - xty);
    Matrix candidate = lookahead - rate * gradient;
    double next_loss = loss_of(candidate);
    if (!(next_loss <= loss)) {
      // Restart the momentum; a plain step that still overshoots means the
      // rate is too large.
      if (since_restart == 0) rate *= 0.5;
      since_restart = 0;
      velocity.setZero();
      if (rate < 1e-300) break;
      continue;
    }
    double change = (loss - next_loss) / loss;
    velocity = candidate - mt;
    mt = std::move(candidate);
    loss = next_loss;
    ++since_restart;
    if (change < config.relative_tolerance) {
      fit.converged = true;
      break;
    }
  }
  fit.mapping = mt.transpose();
  fit.residual = fit_residual(pair, fit.mapping);
  fit.s_lmp = -fit.residual;
  return fit;
}

LinearFit fit_linear_closed(const AlignedMatrixPair& pair) {
  require_preprocessed(pair);
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(pair.x);
  LinearFit fit;
  fit.mapping = cod.solve(pair.y).transpose();
  fit.residual = fit_residual(pair, fit.mapping);
  fit.s_lmp = -fit.residual;
  fit.iterations = 0;
  fit.converged = true;
  return fit;
}

}  // namespace anlgmap
