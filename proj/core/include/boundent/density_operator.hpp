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

#include <array>
#include <initializer_list>
#include <string>
#include <vector>

#include "boundent/operator.hpp"

namespace boundent {

/// Tolerance for exactly constructed synthetic states.
inline constexpr double kExactTolerance = 1e-10;
/// Tolerance for states produced by least-squares reconstruction.
inline constexpr double kReconstructionTolerance = 1e-6;

enum class PsdCheck {
  kEnforce,  ///< negative eigenvalues beyond tolerance throw
  kReport,   ///< negative eigenvalues are recorded, see DensityOperator::is_psd
};

/// Hermitian, unit-trace operator that is positive semidefinite within a
/// tolerance. Hermiticity and trace are always enforced.
class DensityOperator {
 public:
  explicit DensityOperator(Operator op, double tolerance = kExactTolerance,
                           PsdCheck psd = PsdCheck::kEnforce);

  /// Normalized |v><v|.
  static DensityOperator pure(const StateVector& v);
  /// Identity / dim.
  static DensityOperator maximally_mixed(int dim);

  const Operator& op() const noexcept { return op_; }
  const ComplexMatrix& matrix() const noexcept { return op_.matrix(); }
  int dim() const noexcept { return op_.dim(); }
  double tolerance() const noexcept { return tolerance_; }
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }
  bool is_psd() const noexcept { return min_eigenvalue_ >= -tolerance_; }

 private:
  Operator op_;
  double tolerance_;
  double min_eigenvalue_;
};

/// Set of qubits (1-based) whose indices are transposed.
class Bipartition {
 public:
  /// Throws DomainError for an empty set or indices outside 1..4.
  Bipartition(std::initializer_list<int> qubits);
  explicit Bipartition(std::vector<int> qubits);

  const std::vector<int>& qubits() const noexcept { return qubits_; }
  /// Qubits of an n-qubit system not in this set.
  Bipartition complement(int num_qubits) const;
  /// e.g. "1|23".
  std::string label(int num_qubits) const;

 private:
  std::vector<int> qubits_;
};

/// Partial transpose over the qubits in `part`. Requires `part` to be a
/// proper subset of the operator's qubits.
Operator partial_transpose(const Operator& op, const Bipartition& part);
Operator partial_transpose(const DensityOperator& rho, const Bipartition& part);

/// Partial trace over the given qubits (1-based).
Operator partial_trace(const Operator& op, const std::vector<int>& traced_qubits);

struct CutVerdict {
  std::string label;
  double min_eigenvalue = 0.0;
  bool ppt = false;
};

struct PptReport {
  std::array<CutVerdict, 3> cuts;  ///< 1|23, 2|13, 3|12
  bool all_ppt() const;
};

/// PPT test of a three-qubit state on each single-qubit cut. A cut passes
/// when the smallest eigenvalue of the partial transpose is >= -tolerance;
/// by default the state's own tolerance is used.
PptReport is_ppt(const DensityOperator& rho);
PptReport is_ppt(const DensityOperator& rho, double tolerance);

}  // namespace boundent
