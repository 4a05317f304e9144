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
#include <vector>

namespace anlgmap {

// Binary logistic regression, P(y = 1 | x) = sigmoid(w.x + b).
struct LogisticModel {
  Eigen::VectorXd weights;
  double bias = 0.0;
  std::size_t epochs = 0;
  bool converged = false;
  double loss = 0.0;

  double probability(const Eigen::Ref<const Eigen::RowVectorXd>& x) const;
};

struct LogisticOptions {
  double l2 = 1e-3;
  double tolerance = 1e-6;
  std::size_t max_epochs = 1000;
};

// Minimises mean log-loss + (l2 / 2) * |w|^2 (bias unpenalised) with damped
// Newton steps. Stops when the loss changes by less than `tolerance`.
// Rows of `features` are samples; labels are 0/1.
LogisticModel train_logistic(const Eigen::MatrixXd& features, const std::vector<int>& labels,
                             const LogisticOptions& options = {});

// The objective above, exposed for tests.
double logistic_objective(const Eigen::MatrixXd& features, const std::vector<int>& labels,
                          const Eigen::VectorXd& weights, double bias, double l2);

}  // namespace anlgmap
