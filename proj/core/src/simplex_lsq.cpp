// Copyright 2026 The boundent Authors
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

#include "boundent/simplex_lsq.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <vector>

#include "boundent/errors.hpp"

namespace boundent {
namespace {

constexpr int kMaxColumns = 16;

std::vector<unsigned> supports_by_size(int n, bool include_empty) {
  std::vector<unsigned> masks;
  for (unsigned m = include_empty ? 0u : 1u; m < (1u << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned x, unsigned y) { return std::popcount(x) < std::popcount(y); });
  return masks;
}

Eigen::MatrixXd select_columns(const Eigen::MatrixXd& a, unsigned mask) {
  Eigen::MatrixXd out(a.rows(), std::popcount(mask));
  int c = 0;
  for (int k = 0; k < a.cols(); ++k) {
    if (mask & (1u << k)) out.col(c++) = a.col(k);
  }
  return out;
}

Eigen::VectorXd scatter(const Eigen::VectorXd& xs, unsigned mask, int n) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  int c = 0;
  for (int k = 0; k < n; ++k) {
    if (mask & (1u << k)) x(k) = xs(c++);
  }
  return x;
}

void check_shape(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  if (a.cols() < 1 || a.cols() > kMaxColumns) throw DomainError("constrained LSQ supports 1..16 columns");
  if (a.rows() != b.size()) throw DimensionError("constrained LSQ: rows of A do not match b");
}

// Keeps the first candidate unless a later one is better beyond `slack`.
struct Best {
  Eigen::VectorXd x;
  double residual = std::numeric_limits<double>::infinity();
  void offer(Eigen::VectorXd cand, double r, double slack) {
    if (r < residual - slack) {
      x = std::move(cand);
      residual = r;
    }
  }
};

}  // namespace

ConstrainedLsq simplex_least_squares(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  check_shape(a, b);
  const int n = static_cast<int>(a.cols());
  // With sum(x) = 1, A x - b = (A - b 1^T) x.
  const Eigen::MatrixXd c = a.colwise() - b;
  const double scale = std::max(c.colwise().norm().maxCoeff(), std::numeric_limits<double>::min());
  const Eigen::MatrixXd cs = c / scale;
  const double slack = 1e-13;

  Best best;
  for (unsigned mask : supports_by_size(n, false)) {
    const Eigen::MatrixXd sub = select_columns(cs, mask);
    const int k = static_cast<int>(sub.cols());
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(k + 1, k + 1);
    kkt.topLeftCorner(k, k) = sub.transpose() * sub;
    kkt.block(0, k, k, 1).setOnes();
    kkt.block(k, 0, 1, k).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
    rhs(k) = 1.0;
    const Eigen::VectorXd sol = kkt.completeOrthogonalDecomposition().solve(rhs);
    Eigen::VectorXd xs = sol.head(k);
    if (xs.minCoeff() < -1e-12) continue;
    xs = xs.cwiseMax(0.0);
    const double s = xs.sum();
    if (!(s > 0.0)) continue;
    xs /= s;
    const double r = (sub * xs).norm();
    best.offer(scatter(xs, mask, n), r, slack);
  }
  return {best.x, best.residual * scale};
}

ConstrainedLsq nonnegative_least_squares(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  check_shape(a, b);
  const int n = static_cast<int>(a.cols());
  const double slack = 1e-13 * std::max(b.norm(), std::numeric_limits<double>::min());

  Best best;
  for (unsigned mask : supports_by_size(n, true)) {
    if (mask == 0) {
      best.offer(Eigen::VectorXd::Zero(n), b.norm(), slack);
      continue;
    }
    const Eigen::MatrixXd sub = select_columns(a, mask);
    Eigen::VectorXd xs = sub.completeOrthogonalDecomposition().solve(b);
    if (xs.minCoeff() < -1e-12 * std::max(1.0, xs.cwiseAbs().maxCoeff())) continue;
    xs = xs.cwiseMax(0.0);
    best.offer(scatter(xs, mask, n), (sub * xs - b).norm(), slack);
  }
  return {best.x, best.residual};
}

}  // namespace boundent
