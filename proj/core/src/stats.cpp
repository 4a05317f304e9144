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

#include "anlgmap/stats.hpp"

#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "anlgmap/error.hpp"
#include "anlgmap/rng.hpp"

namespace anlgmap {

double s_pae(double lrcos_x, double lrcos_y) {
  auto valid = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!valid(lrcos_x) || !valid(lrcos_y)) {
    throw ValidationError("S_PAE inputs must lie in [0, 1]");
  }
  return std::sqrt(lrcos_x * lrcos_y);
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
  std::vector<double> ranks(values.size());
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t end = start + 1;
    while (end < order.size() && values[order[end]] == values[order[start]]) ++end;
    double rank = (static_cast<double>(start + 1) + static_cast<double>(end)) / 2.0;
    for (std::size_t k = start; k < end; ++k) ranks[order[k]] = rank;
    start = end;
  }
  return ranks;
}

namespace {

void check_series(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw ValidationError("correlation: series lengths differ");
  if (xs.size() < 3) throw ValidationError("correlation: need at least 3 samples");
  auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(xs.begin(), xs.end(), finite) || !std::all_of(ys.begin(), ys.end(), finite)) {
    throw ValidationError("correlation: non-finite sample");
  }
}

double pearson_coefficient(std::span<const double> xs, std::span<const double> ys) {
  const double n = static_cast<double>(xs.size());
  double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double dx = xs[i] - mx;
    double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw ValidationError("correlation undefined for a constant series");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double t_test_p(double r, std::size_t n) {
  double df = static_cast<double>(n - 2);
  if (std::abs(r) >= 1.0) return std::numeric_limits<double>::min();
  double t = r * std::sqrt(df / (1.0 - r * r));
  boost::math::students_t dist(df);
  double p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
  return std::clamp(p, std::numeric_limits<double>::min(), 1.0);
}

}  // namespace

Correlation pearson_r(std::span<const double> xs, std::span<const double> ys) {
  check_series(xs, ys);
  double r = pearson_coefficient(xs, ys);
  return {r, t_test_p(r, xs.size())};
}

Correlation spearman_rho(std::span<const double> xs, std::span<const double> ys) {
  check_series(xs, ys);
  auto rx = average_ranks(xs);
  auto ry = average_ranks(ys);
  double rho = pearson_coefficient(rx, ry);
  return {rho, t_test_p(rho, xs.size())};
}

double permutation_p_value(std::span<const double> xs, std::span<const double> ys,
                           CorrelationMethod method, std::size_t permutations,
                           std::uint64_t seed) {
  check_series(xs, ys);
  if (permutations == 0) throw ValidationError("permutation test needs at least one permutation");
  std::vector<double> a(xs.begin(), xs.end());
  std::vector<double> b(ys.begin(), ys.end());
  if (method == CorrelationMethod::spearman) {
    a = average_ranks(a);
    b = average_ranks(b);
  }
  double observed = std::abs(pearson_coefficient(a, b));
  // Rounding noise must not turn an equal statistic into a smaller one.
  double threshold = observed - 1e-12;
  Rng rng(seed);
  std::size_t extreme = 0;
  for (std::size_t k = 0; k < permutations; ++k) {
    rng.shuffle(b);
    if (std::abs(pearson_coefficient(a, b)) >= threshold) ++extreme;
  }
  return static_cast<double>(extreme + 1) / static_cast<double>(permutations + 1);
}

AnovaResult anova_two_treatment(std::span<const double> group_a, std::span<const double> group_b) {
  if (group_a.size() < 2 || group_b.size() < 2) {
    throw ValidationError("ANOVA: each group needs at least 2 values");
  }
  auto mean = [](std::span<const double> g) {
    return std::accumulate(g.begin(), g.end(), 0.0) / static_cast<double>(g.size());
  };
  double ma = mean(group_a);
  double mb = mean(group_b);
  double na = static_cast<double>(group_a.size());
  double nb = static_cast<double>(group_b.size());
  // Equals sum_g n_g (mean_g - grand)^2 for two groups.
  double ss_between = na * nb / (na + nb) * (ma - mb) * (ma - mb);
  double ss_within = 0.0;
  for (double v : group_a) ss_within += (v - ma) * (v - ma);
  for (double v : group_b) ss_within += (v - mb) * (v - mb);
  double df_within = na + nb - 2.0;
  if (!(ss_within > 0.0)) throw ValidationError("ANOVA: pooled within-group variance is zero");

  double f = ss_between / (ss_within / df_within);
  boost::math::fisher_f dist(1.0, df_within);
  double p = f == 0.0 ? 1.0 : boost::math::cdf(boost::math::complement(dist, f));
  return {f, p};
}

}  // namespace anlgmap
