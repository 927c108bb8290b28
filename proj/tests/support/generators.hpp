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

// Hand-rolled random generators for property tests. Every generator takes
// the engine explicitly so a failing case can be replayed from its seed.

#include <cmath>
#include <random>

#include "boundent/acin_states.hpp"
#include "boundent/density_operator.hpp"
#include "boundent/operator.hpp"

namespace boundent::testing {

using Rng = std::mt19937_64;

inline ComplexMatrix ginibre(Rng& rng, int rows, int cols) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) g(i, j) = Complex(n(rng), n(rng));
  }
  return g;
}

/// Haar-random unitary via QR of a Ginibre matrix with phase fix.
inline Operator random_unitary(Rng& rng, int dim) {
  const ComplexMatrix g = ginibre(rng, dim, dim);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR();
  for (int k = 0; k < dim; ++k) {
    const Complex d = r(k, k);
    q.col(k) *= d / std::abs(d);
  }
  return Operator(q);
}

/// rank-k density operator G G^dagger / tr, k = dim gives full rank.
inline DensityOperator random_density(Rng& rng, int dim, int rank = 0) {
  const ComplexMatrix g = ginibre(rng, dim, rank > 0 ? rank : dim);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  m = 0.5 * (m + m.adjoint());
  return DensityOperator(Operator(m));
}

inline StateVector random_state_vector(Rng& rng, int dim) {
  StateVector v = ginibre(rng, dim, 1).col(0);
  return v / v.norm();
}

/// Random Hermitian operator with O(1) entries.
inline Operator random_hermitian(Rng& rng, int dim) {
  const ComplexMatrix g = ginibre(rng, dim, dim);
  return Operator(0.5 * (g + g.adjoint()));
}

/// Triple uniform in (lo, hi)^3.
inline StateParams random_params(Rng& rng, double lo = 0.1, double hi = 3.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  const double a1 = u(rng);
  const double a2 = u(rng);
  const double a3 = u(rng);
  return {a1, a2, a3};
}

}  // namespace boundent::testing
