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

#include "boundent/spin_operators.hpp"

#include <cmath>
#include <string>

#include "boundent/errors.hpp"

namespace boundent {

Axis parse_axis(std::string_view s) {
  if (s == "x" || s == "X") return Axis::kX;
  if (s == "y" || s == "Y") return Axis::kY;
  if (s == "z" || s == "Z") return Axis::kZ;
  throw DomainError("unknown spin axis '" + std::string(s) + "'");
}

namespace {

Operator half_pauli(Axis axis) {
  switch (axis) {
    case Axis::kX:
      return 0.5 * pauli::x();
    case Axis::kY:
      return 0.5 * pauli::y();
    case Axis::kZ:
      return 0.5 * pauli::z();
  }
  throw DomainError("unknown spin axis");
}

}  // namespace

Operator spin_operator(int qubit, Axis axis, int num_qubits) {
  if (num_qubits < 1 || num_qubits > 4) throw DomainError("spin register must have 1..4 qubits");
  if (qubit < 1 || qubit > num_qubits) {
    throw DomainError("qubit index " + std::to_string(qubit) + " outside 1.." + std::to_string(num_qubits));
  }
  Operator out = qubit == 1 ? half_pauli(axis) : pauli::identity();
  for (int q = 2; q <= num_qubits; ++q) out = tensor(out, q == qubit ? half_pauli(axis) : pauli::identity());
  return out;
}

Operator z_product(ZTerm term) {
  const Operator z1 = spin_operator(1, Axis::kZ);
  const Operator z2 = spin_operator(2, Axis::kZ);
  const Operator z3 = spin_operator(3, Axis::kZ);
  switch (term) {
    case ZTerm::kZ1:
      return z1;
    case ZTerm::kZ2:
      return z2;
    case ZTerm::kZ3:
      return z3;
    case ZTerm::kZ1Z2:
      return z1 * z2;
    case ZTerm::kZ1Z3:
      return z1 * z3;
    case ZTerm::kZ2Z3:
      return z2 * z3;
    case ZTerm::kZ1Z2Z3:
      return z1 * z2 * z3;
  }
  throw DomainError("unknown product-operator term");
}

std::string_view to_string(ZTerm term) {
  switch (term) {
    case ZTerm::kZ1:
      return "Iz1";
    case ZTerm::kZ2:
      return "Iz2";
    case ZTerm::kZ3:
      return "Iz3";
    case ZTerm::kZ1Z2:
      return "Iz1Iz2";
    case ZTerm::kZ1Z3:
      return "Iz1Iz3";
    case ZTerm::kZ2Z3:
      return "Iz2Iz3";
    case ZTerm::kZ1Z2Z3:
      return "Iz1Iz2Iz3";
  }
  return "?";
}

Operator spin_rotation(Axis axis, double angle) {
  // exp(-i angle sigma/2) = cos(angle/2) 1 - i sin(angle/2) sigma
  const Operator sigma = 2.0 * half_pauli(axis);
  return std::cos(angle / 2.0) * pauli::identity() + Complex(0.0, -std::sin(angle / 2.0)) * sigma;
}

}  // namespace boundent
