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

#include "anlgmap/logistic.hpp"

#include <cmath>

#include "anlgmap/error.hpp"

namespace anlgmap {

namespace {

// log(1 + exp(z)) without overflow.
double softplus(double z) {
  return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  double e = std::exp(z);
  return e / (1.0 + e);
}

}  // namespace

double LogisticModel::probability(const Eigen::Ref<const Eigen::RowVectorXd>& x) const {
  return sigmoid(x.dot(weights) + bias);
}

double logistic_objective(const Eigen::MatrixXd& features, const std::vector<int>& labels,
                          const Eigen::VectorXd& weights, double bias, double l2) {
  Eigen::VectorXd z = (features * weights).array() + bias;
  double loss = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    // -log sigmoid(z) = softplus(-z); -log(1 - sigmoid(z)) = softplus(z)
    loss += labels[static_cast<std::size_t>(i)] ? softplus(-z(i)) : softplus(z(i));
  }
  return loss / static_cast<double>(z.size()) + 0.5 * l2 * weights.squaredNorm();
}

LogisticModel train_logistic(const Eigen::MatrixXd& features, const std::vector<int>& labels,
                             const LogisticOptions& options) {
  const Eigen::Index n = features.rows();
  const Eigen::Index d = features.cols();
  if (n == 0 || static_cast<std::size_t>(n) != labels.size()) {
    throw ValidationError("logistic regression needs one label per sample");
  }

  // Augmented parameter vector [w; b].
  Eigen::MatrixXd design(n, d + 1);
  design.leftCols(d) = features;
  design.col(d).setOnes();
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) y(i) = labels[static_cast<std::size_t>(i)] ? 1.0 : 0.0;

  Eigen::VectorXd theta = Eigen::VectorXd::Zero(d + 1);
  Eigen::VectorXd penalty = Eigen::VectorXd::Constant(d + 1, options.l2);
  penalty(d) = 0.0;
  const double inv_n = 1.0 / static_cast<double>(n);

  auto objective = [&](const Eigen::VectorXd& t) {
    return logistic_objective(features, labels, t.head(d), t(d), options.l2);
  };

  LogisticModel model;
  double loss = objective(theta);
  for (std::size_t epoch = 1; epoch <= options.max_epochs; ++epoch) {
    Eigen::VectorXd z = design * theta;
    Eigen::VectorXd p = z.unaryExpr([](double v) { return sigmoid(v); });
    Eigen::VectorXd gradient = inv_n * (design.transpose() * (p - y));
    gradient += penalty.cwiseProduct(theta);
    Eigen::VectorXd curvature = (p.array() * (1.0 - p.array())).matrix() * inv_n;
    Eigen::MatrixXd hessian = design.transpose() * curvature.asDiagonal() * design;
    hessian.diagonal() += penalty;
    // The bias direction can be flat on saturated data.
    hessian.diagonal().array() += 1e-12;

    Eigen::VectorXd step = hessian.ldlt().solve(gradient);
    double scale = 1.0;
    double next_loss = objective(theta - step);
    while (!(next_loss <= loss) && scale > 1e-10) {
      scale *= 0.5;
      next_loss = objective(theta - scale * step);
    }
    if (!(next_loss <= loss)) {
      model.epochs = epoch;
      model.converged = true;
      break;
    }
    theta -= scale * step;
    double change = loss - next_loss;
    loss = next_loss;
    model.epochs = epoch;
    if (change < options.tolerance) {
      model.converged = true;
      break;
    }
  }

  model.weights = theta.head(d);
  model.bias = theta(d);
  model.loss = loss;
  return model;
}

}  // namespace anlgmap
