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

#include "anlgmap/transport.hpp"

#include <algorithm>
#include <cmath>

#include "anlgmap/error.hpp"
#include "anlgmap/parallel.hpp"
#include "anlgmap/rng.hpp"

namespace anlgmap {

std::uint64_t pairing_count(std::size_t n) {
  if (n == 0 || n % 2 != 0) return 0;
  std::uint64_t count = 1;
  for (std::size_t k = n - 1; k > 1; k -= 2) count *= k;
  return count;
}

namespace {

void check_pairing_size(std::size_t n, std::size_t cap) {
  if (n < 2 || n % 2 != 0) {
    throw ValidationError("perfect matchings need an even number (>= 2) of vectors, got " +
                          std::to_string(n));
  }
  if (n > cap) {
    throw ValidationError(std::to_string(n) + " vectors exceed the enumeration cap of " +
                          std::to_string(cap));
  }
}

void extend(Matching& current, std::vector<char>& used,
            const std::function<void(const Matching&)>& visit) {
  std::size_t first = 0;
  while (first < used.size() && used[first]) ++first;
  if (first == used.size()) {
    visit(current);
    return;
  }
  used[first] = 1;
  for (std::size_t partner = first + 1; partner < used.size(); ++partner) {
    if (used[partner]) continue;
    used[partner] = 1;
    current.emplace_back(first, partner);
    extend(current, used, visit);
    current.pop_back();
    used[partner] = 0;
  }
  used[first] = 0;
}

}  // namespace

void for_each_pairing(std::size_t n, const std::function<void(const Matching&)>& visit,
                      std::size_t cap) {
  check_pairing_size(n, cap);
  Matching current;
  current.reserve(n / 2);
  std::vector<char> used(n, 0);
  extend(current, used, visit);
}

std::vector<Matching> enumerate_pairings(std::size_t n, std::size_t cap) {
  std::vector<Matching> all;
  check_pairing_size(n, cap);
  all.reserve(pairing_count(n));
  for_each_pairing(n, [&](const Matching& m) { all.push_back(m); }, cap);
  return all;
}

Matching canonical_matching(Matching matching, std::size_t n) {
  std::vector<char> seen(n, 0);
  for (auto& [a, b] : matching) {
    if (a >= n || b >= n || a == b || seen[a] || seen[b]) {
      throw ValidationError("pairing does not cover every vector exactly once");
    }
    seen[a] = seen[b] = 1;
    if (a > b) std::swap(a, b);
  }
  if (matching.size() * 2 != n) throw ValidationError("pairing does not cover every vector");
  std::sort(matching.begin(), matching.end());
  return matching;
}

std::string to_string(CostKind kind) {
  switch (kind) {
    case CostKind::euclidean: return "euclidean";
    case CostKind::taxicab: return "taxicab";
    case CostKind::cosine: return "cosine";
  }
  return "?";
}

CostKind parse_cost_kind(std::string_view text) {
  if (text == "euclidean") return CostKind::euclidean;
  if (text == "taxicab") return CostKind::taxicab;
  if (text == "cosine") return CostKind::cosine;
  throw ValidationError("unknown cost '" + std::string(text) + "'");
}

double transport_distance(const Vector& p, const Vector& v, CostKind kind) {
  switch (kind) {
    case CostKind::euclidean: return (p - v).norm();
    case CostKind::taxicab: return (p - v).lpNorm<1>();
    case CostKind::cosine: {
      double denom = p.norm() * v.norm();
      if (denom == 0.0) return 1.0;
      return 1.0 - p.dot(v) / denom;
    }
  }
  return 0.0;
}

double total_transport_cost(const Vector& p, const std::vector<Vector>& offsets, CostKind kind) {
  double total = 0.0;
  for (const auto& v : offsets) total += transport_distance(p, v, kind);
  return total;
}

Vector find_p_star(const std::vector<Vector>& offsets, CostKind kind, const PStarOptions& options) {
  if (offsets.empty()) throw ValidationError("p*: no offset vectors");
  const Eigen::Index dim = offsets.front().size();
  for (const auto& v : offsets) {
    if (v.size() != dim) throw ValidationError("p*: offsets differ in dimension");
    if (kind == CostKind::cosine && v.isZero(0.0)) {
      throw ValidationError("p*: zero offset vector under cosine cost");
    }
  }

  Vector mean = Vector::Zero(dim);
  for (const auto& v : offsets) mean += v;
  mean /= static_cast<double>(offsets.size());
  double spread = 0.0;
  for (const auto& v : offsets) spread += (v - mean).squaredNorm();
  spread = std::sqrt(spread / static_cast<double>(offsets.size() * static_cast<std::size_t>(dim)));
  if (spread == 0.0) return mean;

  auto objective = [&](const Eigen::VectorXd& p) { return total_transport_cost(p, offsets, kind); };
  NelderMeadOptions simplex = options.simplex;
  if (options.simplex_scale > 0.0) simplex.absolute_step = options.simplex_scale * spread;
  NelderMeadResult best = nelder_mead(objective, mean, simplex);

  // Each restart re-opens a simplex of the initial size around the best point,
  // with seeded random edge signs and a jittered centre.
  Rng rng(options.seed);
  const double edge = simplex.absolute_step > 0.0 ? simplex.absolute_step : spread;
  for (std::size_t r = 0; r < options.restarts; ++r) {
    Vector start = best.x;
    for (Eigen::Index k = 0; k < dim; ++k) start(k) += options.restart_scale * spread * rng.normal();
    std::vector<Eigen::VectorXd> points(static_cast<std::size_t>(dim + 1), start);
    for (Eigen::Index k = 0; k < dim; ++k) {
      points[static_cast<std::size_t>(k + 1)](k) += rng.uniform() < 0.5 ? -edge : edge;
    }
    NelderMeadResult trial = nelder_mead(objective, std::move(points), simplex);
    if (trial.value < best.value) best = std::move(trial);
  }
  // Degenerate starts can leave the mean itself ahead.
  if (objective(mean) < best.value) return mean;
  return best.x;
}

PairingScheme pairing_cost(const std::vector<Vector>& vectors, const Matching& matching,
                           CostKind kind, const PStarOptions& options) {
  canonical_matching(matching, vectors.size());
  PairingScheme scheme;
  scheme.pairs = matching;
  scheme.cost_kind = kind;
  scheme.offsets.reserve(matching.size());
  for (const auto& [a, b] : matching) scheme.offsets.push_back(vectors[a] - vectors[b]);
  scheme.p_star = find_p_star(scheme.offsets, kind, options);
  scheme.cost = total_transport_cost(scheme.p_star, scheme.offsets, kind);
  return scheme;
}

PairingVerdict verify_best_pairing(const std::vector<Vector>& vectors, const Matching& reference,
                                   CostKind kind, const VerifyOptions& options) {
  const std::size_t n = vectors.size();
  check_pairing_size(n, options.cap);
  Matching reference_canonical = canonical_matching(reference, n);

  auto matchings = enumerate_pairings(n, options.cap);
  std::vector<double> costs(matchings.size());
  std::size_t reference_index = matchings.size();
  for (std::size_t i = 0; i < matchings.size(); ++i) {
    if (matchings[i] == reference_canonical) reference_index = i;
  }
  parallel_for(matchings.size(), options.jobs, [&](std::size_t i) {
    const Matching& m = i == reference_index ? reference : matchings[i];
    costs[i] = pairing_cost(vectors, m, kind, options.p_star).cost;
  });

  PairingVerdict verdict;
  verdict.reference_cost = costs[reference_index];
  double tolerance = options.tie_tolerance * std::max(1.0, std::abs(verdict.reference_cost));
  bool strictly_best = true;
  for (std::size_t i = 0; i < matchings.size(); ++i) {
    if (i == reference_index) continue;
    if (costs[i] <= verdict.reference_cost + tolerance) {
      if (costs[i] >= verdict.reference_cost - tolerance) ++verdict.ties;
      strictly_best = false;
    }
  }
  verdict.is_optimal = strictly_best;

  verdict.ranked.reserve(matchings.size());
  for (std::size_t i = 0; i < matchings.size(); ++i) {
    verdict.ranked.push_back({i == reference_index ? reference : matchings[i], costs[i],
                              i == reference_index});
  }
  std::stable_sort(verdict.ranked.begin(), verdict.ranked.end(),
                   [](const auto& x, const auto& y) { return x.cost < y.cost; });
  return verdict;
}

}  // namespace anlgmap
