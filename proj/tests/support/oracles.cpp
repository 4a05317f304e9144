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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace anlgmap::oracle {

Rows to_rows(const Matrix& m) {
  Rows rows(static_cast<std::size_t>(m.rows()), std::vector<double>(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  }
  return rows;
}

Matrix to_matrix(const Rows& rows) {
  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.at(0).size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<double> unit(std::vector<double> v) {
  double n = std::sqrt(dot(v, v));
  for (double& x : v) x /= n;
  return v;
}

std::vector<double> combine(const std::vector<double>& a, double s, const std::vector<double>& b) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + s * b[i];
  return out;
}

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  return dot(a, b) / std::sqrt(dot(a, a) * dot(b, b));
}

}  // namespace

std::string solve(const Embedding& embedding, const AnalogyQuestion& q, SolverKind solver,
                  const std::function<double(std::size_t)>& probability) {
  Rows rows = to_rows(embedding.matrix());
  for (auto& r : rows) r = unit(r);
  std::size_t ia = *embedding.find(q.a), ib = *embedding.find(q.b), ic = *embedding.find(q.c);
  const auto &a = rows[ia], &b = rows[ib], &c = rows[ic];
  std::size_t best = rows.size();
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t w = 0; w < rows.size(); ++w) {
    if (w == ia || w == ib || w == ic) continue;
    const auto& v = rows[w];
    double score = 0;
    switch (solver) {
      case SolverKind::cos_add:
        score = cosine(v, combine(combine(b, -1.0, a), 1.0, c));
        break;
      case SolverKind::cos_mul: {
        double sa = (cosine(v, a) + 1) / 2, sb = (cosine(v, b) + 1) / 2, sc = (cosine(v, c) + 1) / 2;
        score = sb * sc / (sa + 1e-3);
        break;
      }
      case SolverKind::pair_distance: {
        auto offset = combine(v, -1.0, c);
        if (dot(offset, offset) == 0) continue;
        score = cosine(offset, combine(b, -1.0, a));
        break;
      }
      case SolverKind::lrcos:
        score = probability(w) * cosine(v, q.across_pairs ? b : c);
        break;
    }
    if (best == rows.size() || score > best_score) {
      best = w;
      best_score = score;
    }
  }
  return embedding.vocab().at(best);
}

double mean(const std::vector<double>& xs) {
  double s = 0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
  double mx = mean(xs), my = mean(ys);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

std::vector<double> ranks(const std::vector<double>& xs) {
  // Rank = 1 + #smaller + (#equal - 1) / 2.
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double smaller = 0, equal = 0;
    for (double y : xs) {
      if (y < xs[i]) ++smaller;
      if (y == xs[i]) ++equal;
    }
    out[i] = 1 + smaller + (equal - 1) / 2;
  }
  return out;
}

double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
  return pearson(ranks(xs), ranks(ys));
}

namespace {

double beta_fraction(double a, double b, double x) {
  const double tiny = 1e-300;
  double c = 1, d = 1 - (a + b) * x / (a + 1);
  if (std::fabs(d) < tiny) d = tiny;
  d = 1 / d;
  double h = d;
  for (int m = 1; m <= 10000; ++m) {
    double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((a + m2 - 1) * (a + m2));
    d = 1 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1 / d;
    h *= d * c;
    aa = -(a + m) * (a + b + m) * x / ((a + m2) * (a + m2 + 1));
    d = 1 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1) < 1e-16) break;
  }
  return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (x <= 0) return 0;
  if (x >= 1) return 1;
  double front = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                          b * std::log1p(-x));
  if (x < (a + 1) / (a + b + 2)) return front * beta_fraction(a, b, x) / a;
  return 1 - front * beta_fraction(b, a, 1 - x) / b;
}

double correlation_p(double r, std::size_t n) {
  double df = static_cast<double>(n) - 2;
  double t2 = r * r * df / (1 - r * r);
  // P(|T| > t) = I_{df/(df+t^2)}(df/2, 1/2)
  return incomplete_beta(df / 2, 0.5, df / (df + t2));
}

Anova anova(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> all(a);
  all.insert(all.end(), b.begin(), b.end());
  double grand = mean(all), ma = mean(a), mb = mean(b);
  double ssb = static_cast<double>(a.size()) * (ma - grand) * (ma - grand) +
               static_cast<double>(b.size()) * (mb - grand) * (mb - grand);
  double ssw = 0;
  for (double x : a) ssw += (x - ma) * (x - ma);
  for (double x : b) ssw += (x - mb) * (x - mb);
  double df2 = static_cast<double>(all.size()) - 2;
  double f = ssb / (ssw / df2);
  // Upper tail of F(1, df2) = I_{df2/(df2+f)}(df2/2, 1/2)
  return {f, incomplete_beta(df2 / 2, 0.5, df2 / (df2 + f))};
}

std::vector<double> weiszfeld(const Rows& points, std::size_t iterations) {
  std::size_t d = points.at(0).size();
  std::vector<double> y(d, 0.0);
  for (const auto& p : points) {
    for (std::size_t k = 0; k < d; ++k) y[k] += p[k] / static_cast<double>(points.size());
  }
  for (std::size_t it = 0; it < iterations; ++it) {
    std::vector<double> num(d, 0.0);
    double den = 0;
    for (const auto& p : points) {
      double dist = std::sqrt(dot(combine(p, -1.0, y), combine(p, -1.0, y)));
      if (dist < 1e-14) return p;
      for (std::size_t k = 0; k < d; ++k) num[k] += p[k] / dist;
      den += 1 / dist;
    }
    double moved = 0;
    for (std::size_t k = 0; k < d; ++k) {
      moved = std::max(moved, std::fabs(num[k] / den - y[k]));
      y[k] = num[k] / den;
    }
    if (moved < 1e-15) break;
  }
  return y;
}

std::vector<double> coordinate_median(const Rows& points) {
  std::size_t d = points.at(0).size();
  std::vector<double> out(d);
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<double> column;
    for (const auto& p : points) column.push_back(p[k]);
    std::sort(column.begin(), column.end());
    std::size_t n = column.size();
    out[k] = n % 2 ? column[n / 2] : (column[n / 2 - 1] + column[n / 2]) / 2;
  }
  return out;
}

Rows normal_equations(const Rows& x, const Rows& y) {
  std::size_t n = x.size(), dx = x[0].size(), dy = y[0].size();
  // Augmented [X^T X | X^T Y].
  Rows a(dx, std::vector<double>(dx + dy, 0.0));
  for (std::size_t i = 0; i < dx; ++i) {
    for (std::size_t j = 0; j < dx; ++j) {
      for (std::size_t r = 0; r < n; ++r) a[i][j] += x[r][i] * x[r][j];
    }
    for (std::size_t j = 0; j < dy; ++j) {
      for (std::size_t r = 0; r < n; ++r) a[i][dx + j] += x[r][i] * y[r][j];
    }
  }
  for (std::size_t col = 0; col < dx; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < dx; ++r) {
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    }
    if (std::fabs(a[pivot][col]) < 1e-300) throw std::runtime_error("singular normal equations");
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r < dx; ++r) {
      if (r == col) continue;
      double factor = a[r][col] / a[col][col];
      for (std::size_t j = col; j < dx + dy; ++j) a[r][j] -= factor * a[col][j];
    }
  }
  Rows m(dy, std::vector<double>(dx));
  for (std::size_t i = 0; i < dx; ++i) {
    for (std::size_t j = 0; j < dy; ++j) m[j][i] = a[i][dx + j] / a[i][i];
  }
  return m;
}

}  // namespace anlgmap::oracle
