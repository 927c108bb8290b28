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

#include <complex>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

namespace boundent {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Largest supported Hilbert-space dimension (four qubits).
inline constexpr int kMaxDim = 16;

/// Dense square complex matrix on 1..4 qubits.
///
/// Basis ordering is big-endian: qubit 1 is the most significant bit of the
/// basis index, so |b1 b2 b3> has index 4*b1 + 2*b2 + b3.
class Operator {
 public:
  /// Throws DimensionError unless the matrix is square with dim in {2,4,8,16},
  /// and InvariantError if any entry is NaN or infinite.
  explicit Operator(ComplexMatrix m);

  static Operator identity(int dim);
  static Operator zero(int dim);
  /// |v><v| for a state vector of supported dimension.
  static Operator projector(const StateVector& v);
  /// |row><col| between computational basis states.
  static Operator basis_outer(int dim, int row, int col);
  static Operator diagonal(const std::vector<double>& diag);

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  int num_qubits() const noexcept;
  const ComplexMatrix& matrix() const noexcept { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }

  Complex trace() const { return m_.trace(); }
  Operator adjoint() const { return Operator(m_.adjoint()); }
  Operator transpose() const { return Operator(m_.transpose()); }

  /// max |A - A^dagger| over entries.
  double hermiticity_error() const;
  bool is_hermitian(double tol) const { return hermiticity_error() <= tol; }

  /// max-abs entrywise distance.
  double max_abs_diff(const Operator& other) const;

  Operator& operator+=(const Operator& rhs);
  Operator& operator-=(const Operator& rhs);
  Operator& operator*=(Complex s);

 private:
  ComplexMatrix m_;
};

Operator operator+(Operator lhs, const Operator& rhs);
Operator operator-(Operator lhs, const Operator& rhs);
Operator operator*(const Operator& lhs, const Operator& rhs);
Operator operator*(Complex s, Operator op);
Operator operator*(Operator op, Complex s);

/// Conjugation u * a * u^dagger.
Operator conjugate(const Operator& u, const Operator& a);

/// tr(a * b) without forming the product.
Complex trace_product(const Operator& a, const Operator& b);

/// Kronecker product. Throws DimensionError if the result exceeds kMaxDim.
Operator tensor(const Operator& a, const Operator& b);
Operator tensor(std::initializer_list<Operator> factors);

namespace pauli {
Operator identity();
Operator x();
Operator y();
Operator z();
}  // namespace pauli

/// Normalized computational basis vector |index> in dimension dim.
StateVector basis_state(int dim, int index);

/// Kronecker product of state vectors, first factor most significant.
StateVector tensor(const StateVector& a, const StateVector& b);

}  // namespace boundent
