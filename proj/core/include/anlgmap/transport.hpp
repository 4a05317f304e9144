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
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "anlgmap/embedding.hpp"
#include "anlgmap/nelder_mead.hpp"

namespace anlgmap {

// A perfect matching as index pairs. The offset of a pair is
// vectors[first] - vectors[second], so orientation matters for cost.
using Matching = std::vector<std::pair<std::size_t, std::size_t>>;

inline constexpr std::size_t kDefaultPairingCap = 12;

// (n - 1)!!, 0 for odd n.
std::uint64_t pairing_count(std::size_t n);

// Calls visit(m) for every perfect matching of {0..n-1}, each exactly once,
// in a fixed order (lowest free index paired with each later free index in
// turn). Throws for odd n, n < 2 or n > cap.
void for_each_pairing(std::size_t n, const std::function<void(const Matching&)>& visit,
                      std::size_t cap = kDefaultPairingCap);
std::vector<Matching> enumerate_pairings(std::size_t n, std::size_t cap = kDefaultPairingCap);

// Canonical form: each pair ordered (low, high), pairs sorted. Throws unless
// `matching` covers 0..n-1 exactly once.
Matching canonical_matching(Matching matching, std::size_t n);

enum class CostKind { euclidean, taxicab, cosine };

std::string to_string(CostKind kind);
CostKind parse_cost_kind(std::string_view text);

// euclidean: |p - v|_2; taxicab: |p - v|_1; cosine: 1 - cos(p, v), with
// cos = 0 when p is the zero vector.
double transport_distance(const Vector& p, const Vector& v, CostKind kind);
double total_transport_cost(const Vector& p, const std::vector<Vector>& offsets, CostKind kind);

struct PStarOptions {
  NelderMeadOptions simplex;
  std::size_t restarts = 5;
  // Initial simplex edge, relative to the offsets' RMS spread around the mean.
  // 0 falls back to the simplex options' own step rule.
  double simplex_scale = 1.0;
  // Restart perturbation, relative to the same spread.
  double restart_scale = 0.0;
  std::uint64_t seed = 0;
};

// Point minimising total_transport_cost: Nelder-Mead from the offsets' mean,
// then `restarts` runs from perturbations of the best point so far.
// Throws for no offsets, or a zero offset under cosine cost.
Vector find_p_star(const std::vector<Vector>& offsets, CostKind kind,
                   const PStarOptions& options = {});

struct PairingScheme {
  Matching pairs;
  std::vector<Vector> offsets;
  Vector p_star;
  double cost = 0.0;
  CostKind cost_kind = CostKind::euclidean;
};

// Offsets follow the pair order given in `matching`, which is not reordered.
PairingScheme pairing_cost(const std::vector<Vector>& vectors, const Matching& matching,
                           CostKind kind, const PStarOptions& options = {});

struct RankedPairing {
  Matching matching;
  double cost = 0.0;
  bool is_reference = false;
};

struct PairingVerdict {
  bool is_optimal = false;
  double reference_cost = 0.0;
  // Matchings other than the reference whose cost ties it.
  std::size_t ties = 0;
  // Every matching, cheapest first (stable in enumeration order).
  std::vector<RankedPairing> ranked;
};

struct VerifyOptions {
  PStarOptions p_star;
  std::size_t cap = kDefaultPairingCap;
  // Costs within tie_tolerance * max(1, |reference cost|) count as ties.
  double tie_tolerance = 1e-7;
  std::size_t jobs = 1;
};

// True iff the reference matching has the strictly smallest cost among all
// perfect matchings of `vectors`. Enumerated matchings take their pair
// orientation from the vector order (low index first); the reference keeps
// its own orientation.
PairingVerdict verify_best_pairing(const std::vector<Vector>& vectors, const Matching& reference,
                                   CostKind kind, const VerifyOptions& options = {});

}  // namespace anlgmap
