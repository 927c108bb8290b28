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

#include "boundent/acin_states.hpp"

#include <cmath>
#include <sstream>

#include "boundent/errors.hpp"

namespace boundent {

void StateParams::validate() const {
  for (double a : {a1, a2, a3}) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      std::ostringstream os;
      os << "state parameters must be positive and finite, got (" << a1 << ", " << a2 << ", " << a3
         << ")";
      throw DomainError(os.str());
    }
  }
}

bool StateParams::entangled_regime() const { return std::abs(a1 * a2 * a3 - 1.0) > 1e-12; }

StateVector ghz(int sign) {
  if (sign != 1 && sign != -1) throw DomainError("GHZ sign must be +1 or -1");
  StateVector v = StateVector::Zero(8);
  v(0) = 1.0 / std::sqrt(2.0);
  v(7) = sign / std::sqrt(2.0);
  return v;
}

DensityOperator acin_state(const StateParams& params) {
  params.validate();
  const auto [a1, a2, a3] = params;
  const double norm = 2.0 + (a1 + 1.0 / a1) + (a2 + 1.0 / a2) + (a3 + 1.0 / a3);
  // 2|GHZ><GHZ| contributes 1 on |000>,|111> and the two coherences.
  const std::vector<double> pops = {1.0, a1, a2, 1.0 / a3, a3, 1.0 / a2, 1.0 / a1, 1.0};
  ComplexMatrix m = ComplexMatrix::Zero(8, 8);
  for (int k = 0; k < 8; ++k) m(k, k) = pops[static_cast<std::size_t>(k)] / norm;
  m(0, 7) = 1.0 / norm;
  m(7, 0) = 1.0 / norm;
  return DensityOperator(Operator(std::move(m)));
}

PseudoState pseudo_state(const DensityOperator& rho_be, double p) {
  return pseudo_state(rho_be, p, rho_be.dim());
}

PseudoState pseudo_state(const DensityOperator& rho_be, double p, int d) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("pseudo-state fraction p must lie in [0, 1]");
  if (d != rho_be.dim()) throw DimensionError("pseudo-state dimension does not match the state");
  Operator mixed = ((1.0 - p) / d) * Operator::identity(d);
  mixed += p * rho_be.op();
  return {DensityOperator(std::move(mixed), rho_be.tolerance()), p, d};
}

DensityOperator peel_identity(const PseudoState& ps) {
  return peel_identity(ps.rho, ps.p, std::max(ps.rho.tolerance(), kReconstructionTolerance));
}

DensityOperator peel_identity(const DensityOperator& rho, double p, double tolerance) {
  if (!(p > 0.0)) throw DomainError("cannot peel the identity for p <= 0: deviation is undefined");
  if (p > 1.0) throw DomainError("pseudo-state fraction p must not exceed 1");
  const int d = rho.dim();
  Operator dev = rho.op() - ((1.0 - p) / d) * Operator::identity(d);
  return DensityOperator((1.0 / p) * dev, tolerance, PsdCheck::kReport);
}

}  // namespace boundent
