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
#include <span>
#include <vector>

namespace anlgmap {

// Geometric mean of two accuracies in [0, 1]; throws outside that range.
double s_pae(double lrcos_x, double lrcos_y);

struct Correlation {
  double coefficient = 0.0;
  // Two-tailed, Student t with n - 2 degrees of freedom.
  double p_value = 1.0;
};

// Ranks 1..n, ties get the average of the ranks they span.
std::vector<double> average_ranks(std::span<const double> values);

// Both throw ValidationError for mismatched lengths, n < 3 or a constant series.
Correlation pearson_r(std::span<const double> xs, std::span<const double> ys);
Correlation spearman_rho(std::span<const double> xs, std::span<const double> ys);

enum class CorrelationMethod { pearson, spearman };

// Permutation p-value: (1 + #{|stat(perm)| >= |stat|}) / (1 + permutations),
// permuting ys with a generator seeded by `seed`.
double permutation_p_value(std::span<const double> xs, std::span<const double> ys,
                           CorrelationMethod method, std::size_t permutations,
                           std::uint64_t seed);

struct AnovaResult {
  double f = 0.0;
  double p_value = 1.0;
};

// One-way ANOVA with two groups; p from F(1, n_a + n_b - 2). Each group needs
// at least 2 values and the pooled within-group variance must be positive.
AnovaResult anova_two_treatment(std::span<const double> group_a, std::span<const double> group_b);

}  // namespace anlgmap
