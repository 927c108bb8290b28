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

#include <cstdint>
#include <vector>

#include "boundent/product_minimizer.hpp"
#include "boundent/witness.hpp"

namespace boundent {

struct OptimizerTraceEntry {
  double a = 0.0;
  double epsilon = 0.0;          ///< product-state minimum of witness_bar(a)
  double noise_threshold = 1.0;  ///< q*(a); 1 when the witness does not detect
};

struct RobustnessReport {
  double a = 0.0;
  double epsilon_certified = 0.0;
  double noise_threshold = 1.0;
  std::vector<OptimizerTraceEntry> trace;  ///< every evaluated point, in order
};

struct SearchRange {
  double lo;
  double hi;
};

struct WitnessOptimizerOptions {
  SearchRange range{0.05, 1.0};
  int restarts = 10000;
  std::uint64_t seed = 0;
  int grid_points = 20;
  double a_tolerance = 1e-5;
  unsigned threads = 0;
};

/// Robustness of the symmetric witness at a: epsilon(a) is certified by
/// min_over_product_states(witness_bar(a)) and q*(a) is the white-noise
/// threshold of witness_bar(a) - epsilon(a) against acin_state(a).
OptimizerTraceEntry evaluate_symmetric(double a, const ProductMinimizerOptions& options);

/// Minimise q*(a) over the symmetric family a1 = a2 = a3 = a.
///
/// A uniform grid brackets the optimum and golden-section search refines it.
/// Objective ties within 1e-9 resolve to the lowest a. Deterministic given
/// the options. Throws DomainError for an empty or non-positive range.
RobustnessReport optimize_parameters(const WitnessOptimizerOptions& options);

}  // namespace boundent
