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

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <vector>

namespace anlgmap {

struct NelderMeadOptions {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  // Stop once every vertex lies within this distance of the best one.
  double diameter_tolerance = 1e-8;
  std::size_t max_iterations = 20000;
  // Initial simplex: x0 + step * e_i. A positive absolute_step is used as is;
  // otherwise step = relative_step * |x0_i|, or zero_step where x0_i == 0.
  double absolute_step = 0.0;
  double relative_step = 0.05;
  double zero_step = 0.00025;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

// Starts from an explicit simplex of n + 1 points in n dimensions.
NelderMeadResult nelder_mead(const Objective& f, std::vector<Eigen::VectorXd> simplex,
                             const NelderMeadOptions& options = {});

NelderMeadResult nelder_mead(const Objective& f, const Eigen::VectorXd& start,
                             const NelderMeadOptions& options = {});

}  // namespace anlgmap
