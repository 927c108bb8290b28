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

/// F = tr sqrt(sqrt(rho) sigma sqrt(rho)).
///
/// `rho` must be PSD. For PSD `sigma` this is the nuclear norm of
/// sqrt(rho) sqrt(sigma); otherwise small negative eigenvalues of the inner
/// operator (down to minus the larger of the two state tolerances) are
/// clipped.
double uhlmann_fidelity(const DensityOperator& rho, const DensityOperator& sigma);

/// Half the trace norm of rho - sigma.
double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);
double trace_distance(const Operator& a, const Operator& b);

}  // namespace boundent
