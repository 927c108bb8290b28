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

#include "boundent/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "boundent/errors.hpp"
#include "boundent/spectral.hpp"

namespace boundent {

double uhlmann_fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("fidelity of states with different dims");
  const Operator root = matrix_sqrt_psd(rho.op(), rho.tolerance());
  if (sigma.is_psd()) {
    // Nuclear norm of sqrt(rho) sqrt(sigma): singular values carry absolute
    // error ~eps, where square roots of inner eigenvalues would turn rounding
    // noise near zero into ~1e-8.
    const Operator other = matrix_sqrt_psd(sigma.op(), sigma.tolerance());
    const Eigen::JacobiSVD<ComplexMatrix> svd(root.matrix() * other.matrix());
    return svd.singularValues().sum();
  }
  // sigma dips below zero (reconstructed states): use the inner operator,
  // clipping eigenvalues down to -tol.
  const double tol = std::max(rho.tolerance(), sigma.tolerance());
  const Operator inner = conjugate(root, sigma.op());
  double f = 0.0;
  for (double v : eigvalsh(inner, std::max(tol, kHermitianTolerance))) {
    if (v < -tol) {
      std::ostringstream os;
      os << "fidelity: inner operator has eigenvalue " << v << " below -" << tol;
      throw InvariantError(os.str());
    }
    f += std::sqrt(std::max(v, 0.0));
  }
  return f;
}

double trace_distance(const Operator& a, const Operator& b) {
  const Operator diff = a - b;
  double sum = 0.0;
  for (double v : eigvalsh(diff, std::max(kHermitianTolerance, 1e-6))) sum += std::abs(v);
  return 0.5 * sum;
}

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
  return trace_distance(rho.op(), sigma.op());
}

}  // namespace boundent
