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

#include "boundent/acin_states.hpp"
#include "boundent/operator.hpp"

namespace boundent {

struct WitnessParams {
  StateParams a;
  double epsilon = 0.0;

  /// Throws DomainError for invalid a or negative epsilon.
  void validate() const;
};

/// Decomposable part of the witness family:
///
///   |GHZ-><GHZ-| + sum_i (|x_i><x_i| + a_i^2 |~x_i><~x_i|) / (1 + a_i^2)
///   - sum_i a_i / (1 + a_i^2) (|000><111| + |111><000|)
///
/// with x_1 = 001, x_2 = 010, x_3 = 100 and ~x their complements. tr = 4.
Operator witness_bar(const StateParams& params);

/// witness_bar(a) - epsilon * 1.
Operator witness(const WitnessParams& params);

/// (w - (1-p) tr(w)/d * 1) / p, so that tr(w_nmr * pseudo_state(rho, p)) =
/// tr(w * rho). For a unit-trace w this is (w - (1-p)/d * 1) / p.
/// Throws DomainError for p <= 0.
Operator pseudo_witness(const Operator& w, double p, int d);

/// tr(w rho). Throws InvariantError if w is not Hermitian within 1e-10.
double expectation(const Operator& w, const DensityOperator& rho);

/// Smallest q with tr(w [(1-q) 1/d + q rho_be]) < 0, i.e.
/// q* = m / (m - tr(w rho_be)) with m = tr(w)/d. Throws DomainError if the
/// witness does not detect rho_be or if m <= 0.
double white_noise_threshold(const Operator& w, const DensityOperator& rho_be);

}  // namespace boundent
