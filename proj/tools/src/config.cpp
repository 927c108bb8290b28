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

#include "boundent_cli/config.hpp"

#include <cmath>

#include "boundent/acin_states.hpp"
#include "boundent/errors.hpp"
#include "boundent/tomography.hpp"
#include "boundent/witness.hpp"

namespace boundent::cli {

void RunConfig::validate() const {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("a must be positive and finite");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw DomainError("epsilon must be finite and non-negative");
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw DomainError("sigma must be finite and non-negative");
  if (!(depolarizing >= 0.0 && depolarizing <= 1.0)) throw DomainError("depolarizing strength must lie in [0, 1]");
  if (!std::isfinite(p)) throw DomainError("p must be finite");
}

NoiseCalibration calibrate_to_reference(double a, double epsilon) {
  const StateParams params = StateParams::symmetric(a);
  const Operator w = witness({params, epsilon});
  const DensityOperator rho = acin_state(params);
  const double w0 = expectation(w, rho);
  const double m = w.trace().real() / rho.dim();
  if (!(w0 < kReferenceWitness) || !(m > kReferenceWitness)) {
    throw DomainError("witness cannot be depolarized onto the reference value");
  }
  NoiseCalibration cal;
  cal.depolarizing = (kReferenceWitness - w0) / (m - w0);

  // Covariance does not depend on the noise draw.
  const auto settings = standard_settings();
  const ReconstructionResult unit = reconstruct(generate_dataset(rho, settings, 1.0, 0));
  cal.sigma = kReferenceWitnessError / propagate_witness_error(unit, w);
  return cal;
}

}  // namespace boundent::cli
