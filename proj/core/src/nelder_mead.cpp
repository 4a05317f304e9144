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

#include "anlgmap/nelder_mead.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "anlgmap/error.hpp"

namespace anlgmap {

NelderMeadResult nelder_mead(const Objective& f, const Eigen::VectorXd& start,
                             const NelderMeadOptions& options) {
  const Eigen::Index n = start.size();
  if (n == 0) throw ValidationError("Nelder-Mead needs at least one dimension");

  std::vector<Eigen::VectorXd> simplex(static_cast<std::size_t>(n + 1), start);
  for (Eigen::Index i = 0; i < n; ++i) {
    auto& v = simplex[static_cast<std::size_t>(i + 1)];
    if (options.absolute_step > 0.0) {
      v(i) += options.absolute_step;
    } else {
      v(i) = v(i) != 0.0 ? (1.0 + options.relative_step) * v(i) : options.zero_step;
    }
  }
  return nelder_mead(f, std::move(simplex), options);
}

NelderMeadResult nelder_mead(const Objective& f, std::vector<Eigen::VectorXd> simplex,
                             const NelderMeadOptions& options) {
  const Eigen::Index n = simplex.empty() ? 0 : simplex.front().size();
  if (n == 0) throw ValidationError("Nelder-Mead needs at least one dimension");
  if (simplex.size() != static_cast<std::size_t>(n + 1)) {
    throw ValidationError("Nelder-Mead simplex needs n + 1 points");
  }
  std::vector<double> values(simplex.size());
  for (std::size_t k = 0; k < simplex.size(); ++k) values[k] = f(simplex[k]);

  std::vector<std::size_t> order(simplex.size());
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
    std::vector<Eigen::VectorXd> s;
    std::vector<double> v;
    for (std::size_t k : order) {
      s.push_back(std::move(simplex[k]));
      v.push_back(values[k]);
    }
    simplex = std::move(s);
    values = std::move(v);
  };
  auto diameter = [&] {
    double d = 0.0;
    for (std::size_t k = 1; k < simplex.size(); ++k) {
      d = std::max(d, (simplex[k] - simplex[0]).lpNorm<Eigen::Infinity>());
    }
    return d;
  };

  NelderMeadResult result;
  sort_simplex();
  const std::size_t worst = simplex.size() - 1;
  for (std::size_t it = 0; it < options.max_iterations; ++it) {
    result.iterations = it;
    if (diameter() < options.diameter_tolerance) {
      result.converged = true;
      break;
    }
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (std::size_t k = 0; k < worst; ++k) centroid += simplex[k];
    centroid /= static_cast<double>(worst);

    Eigen::VectorXd reflected = centroid + options.reflection * (centroid - simplex[worst]);
    double f_reflected = f(reflected);
    if (f_reflected < values[0]) {
      Eigen::VectorXd expanded = centroid + options.expansion * (reflected - centroid);
      double f_expanded = f(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = std::move(expanded);
        values[worst] = f_expanded;
      } else {
        simplex[worst] = std::move(reflected);
        values[worst] = f_reflected;
      }
    } else if (f_reflected < values[worst - 1]) {
      simplex[worst] = std::move(reflected);
      values[worst] = f_reflected;
    } else {
      bool outside = f_reflected < values[worst];
      Eigen::VectorXd contracted =
          outside ? Eigen::VectorXd(centroid + options.contraction * (reflected - centroid))
                  : Eigen::VectorXd(centroid + options.contraction * (simplex[worst] - centroid));
      double f_contracted = f(contracted);
      if (f_contracted < (outside ? f_reflected : values[worst])) {
        simplex[worst] = std::move(contracted);
        values[worst] = f_contracted;
      } else {
        for (std::size_t k = 1; k < simplex.size(); ++k) {
          simplex[k] = simplex[0] + options.shrink * (simplex[k] - simplex[0]);
          values[k] = f(simplex[k]);
        }
      }
    }
    sort_simplex();
  }
  if (!result.converged && diameter() < options.diameter_tolerance) result.converged = true;
  result.x = simplex[0];
  result.value = values[0];
  return result;
}

}  // namespace anlgmap
