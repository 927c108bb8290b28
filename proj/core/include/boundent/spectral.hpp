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

#include <vector>

#include "boundent/operator.hpp"

namespace boundent {

/// Default Hermiticity tolerance accepted by the spectral routines.
inline constexpr double kHermitianTolerance = 1e-10;

struct EigenDecomposition {
  Eigen::VectorXd values;  ///< ascending
  ComplexMatrix vectors;   ///< column k belongs to values[k]
};

/// Hermitian eigendecomposition. The input is symmetrized before solving.
/// Throws InvariantError if max|h - h^dagger| exceeds `hermitian_tol`.
EigenDecomposition eigh(const Operator& h, double hermitian_tol = kHermitianTolerance);

/// Real eigenvalues in ascending order.
std::vector<double> eigvalsh(const Operator& h, double hermitian_tol = kHermitianTolerance);

double min_eigenvalue(const Operator& h, double hermitian_tol = kHermitianTolerance);

/// Principal square root of a positive semidefinite operator. Eigenvalues in
/// [-psd_tol, 0) are clipped to zero, as are positive ones below the
/// solver's rounding level (8 * dim * eps * max|lambda|); anything more
/// negative than -psd_tol throws InvariantError.
Operator matrix_sqrt_psd(const Operator& h, double psd_tol = 1e-10);

/// Number of eigenvalues above rel_tol * (largest eigenvalue).
int numeric_rank(const Operator& h, double rel_tol = 1e-7);

}  // namespace boundent
