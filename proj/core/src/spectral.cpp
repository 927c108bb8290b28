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

#include "boundent/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "boundent/errors.hpp"

namespace boundent {

namespace {

ComplexMatrix checked_symmetric_part(const Operator& h, double hermitian_tol) {
  const double herr = h.hermiticity_error();
  if (herr > hermitian_tol) {
    std::ostringstream os;
    os << "operator is not Hermitian (max |H - H^dagger| = " << herr << ")";
    throw InvariantError(os.str());
  }
  return 0.5 * (h.matrix() + h.matrix().adjoint());
}

}  // namespace

EigenDecomposition eigh(const Operator& h, double hermitian_tol) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(checked_symmetric_part(h, hermitian_tol));
  if (solver.info() != Eigen::Success) throw InvariantError("eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<double> eigvalsh(const Operator& h, double hermitian_tol) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(checked_symmetric_part(h, hermitian_tol),
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw InvariantError("eigensolver did not converge");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double min_eigenvalue(const Operator& h, double hermitian_tol) {
  return eigvalsh(h, hermitian_tol).front();
}

Operator matrix_sqrt_psd(const Operator& h, double psd_tol) {
  const EigenDecomposition ed = eigh(h, std::max(psd_tol, kHermitianTolerance));
  // Eigenvalues this small are rounding noise of the solver; their square
  // roots would not be.
  const double floor = 8.0 * h.dim() * std::numeric_limits<double>::epsilon() * ed.values.cwiseAbs().maxCoeff();
  Eigen::VectorXd roots(ed.values.size());
  for (Eigen::Index k = 0; k < ed.values.size(); ++k) {
    const double v = ed.values(k) <= floor ? std::min(ed.values(k), 0.0) : ed.values(k);
    if (v < -psd_tol) {
      std::ostringstream os;
      os << "square root of an operator with eigenvalue " << v << " < -" << psd_tol;
      throw InvariantError(os.str());
    }
    roots(k) = std::sqrt(std::max(v, 0.0));
  }
  return Operator(ed.vectors * roots.asDiagonal() * ed.vectors.adjoint());
}

int numeric_rank(const Operator& h, double rel_tol) {
  const std::vector<double> ev = eigvalsh(h);
  const double cutoff = rel_tol * std::max(ev.back(), 0.0);
  return static_cast<int>(std::count_if(ev.begin(), ev.end(), [&](double v) { return v > cutoff; }));
}

}  // namespace boundent
