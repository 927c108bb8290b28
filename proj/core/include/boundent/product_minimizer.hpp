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

#include <array>
#include <cstdint>

#include "boundent/operator.hpp"

namespace boundent {

/// Bloch angles (theta_1, phi_1, theta_2, phi_2, theta_3, phi_3) of a
/// three-qubit product state, |q> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
using BlochAngles = std::array<double, 6>;

StateVector product_state(const BlochAngles& angles);

/// <psi|w|psi> for the product state with the given angles.
double product_expectation(const Operator& w, const BlochAngles& angles);

struct ProductMinimum {
  double value = 0.0;
  BlochAngles angles{};
  int restart = -1;  ///< index of the restart that produced the minimum
};

struct ProductMinimizerOptions {
  int restarts = 10000;
  std::uint64_t seed = 0;
  int max_sweeps = 500;
  double tolerance = 1e-14;  ///< stop when a full sweep improves by less
  /// 0 picks std::thread::hardware_concurrency(). The result does not depend
  /// on the thread count.
  unsigned threads = 0;
};

/// Minimise <a|<b|<c| w |a>|b>|c> over pure three-qubit product states.
///
/// Each restart draws uniform random Bloch angles from a generator seeded by
/// (seed, restart index) and runs block-coordinate descent: one qubit's
/// angles at a time are set to the minimising eigenvector of the 2x2
/// operator obtained by contracting w with the other two qubits. Restart k
/// is a pure function of (w, seed, k), so the best value is non-increasing
/// in `restarts`. Ties go to the lowest restart index.
///
/// Throws DomainError if restarts < 1, DimensionError unless w is 8x8 and
/// InvariantError if w is not Hermitian.
ProductMinimum min_over_product_states(const Operator& w, const ProductMinimizerOptions& options);
ProductMinimum min_over_product_states(const Operator& w, int restarts, std::uint64_t seed);

}  // namespace boundent
