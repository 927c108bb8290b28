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

#pragma once

#include <Eigen/Dense>

namespace boundent {

struct ConstrainedLsq {
  Eigen::VectorXd x;
  double residual = 0.0;  ///< ||A x - b||_2
};

/// min ||A x - b|| subject to x >= 0 and sum(x) = 1.
///
/// Exact active-set enumeration over all supports, so only intended for a
/// handful of columns (at most 16). Near-ties prefer the smaller support.
ConstrainedLsq simplex_least_squares(const Eigen::MatrixXd& a, const Eigen::VectorXd& b);

/// min ||A x - b|| subject to x >= 0, by the same enumeration.
ConstrainedLsq nonnegative_least_squares(const Eigen::MatrixXd& a, const Eigen::VectorXd& b);

}  // namespace boundent
