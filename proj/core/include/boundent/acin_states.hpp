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

#include "boundent/density_operator.hpp"

namespace boundent {

/// Positive parameters (a1, a2, a3) of the three-qubit PPT entangled family.
///
/// a1 weights |001>, a2 weights |010>, a3 weights |100>; their reciprocals
/// weight the bitwise complements.
struct StateParams {
  double a1;
  double a2;
  double a3;

  /// Throws DomainError unless all parameters are positive and finite.
  void validate() const;
  /// a1*a2*a3 != 1 (tested at 1e-12). The family is separable on the boundary.
  bool entangled_regime() const;
  bool symmetric() const { return a1 == a2 && a2 == a3; }

  static StateParams symmetric(double a) { return {a, a, a}; }
};

/// (|000> + sign |111>) / sqrt(2). sign must be +1 or -1.
StateVector ghz(int sign = +1);

/// N^-1 (2|GHZ><GHZ| + a1|001><001| + a2|010><010| + 1/a3|011><011|
///       + a3|100><100| + 1/a2|101><101| + 1/a1|110><110|),
/// N = 2 + sum_i (a_i + 1/a_i).
DensityOperator acin_state(const StateParams& params);

/// (1-p)/d * 1 + p * rho_be, the form reachable in room-temperature NMR.
struct PseudoState {
  DensityOperator rho;
  double p;
  int dim;
};

/// Throws DomainError for p outside [0, 1] or d != rho_be.dim().
PseudoState pseudo_state(const DensityOperator& rho_be, double p);
PseudoState pseudo_state(const DensityOperator& rho_be, double p, int d);

/// (rho - (1-p)/d * 1) / p.
///
/// The result is never rejected for negative eigenvalues; check is_psd() on
/// the returned state. Throws DomainError for p <= 0 (undefined deviation).
DensityOperator peel_identity(const PseudoState& ps);
DensityOperator peel_identity(const DensityOperator& rho, double p,
                              double tolerance = kReconstructionTolerance);

}  // namespace boundent
