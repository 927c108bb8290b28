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

#include "boundent/operator.hpp"

#include <cmath>
#include <string>

#include "boundent/errors.hpp"

namespace boundent {
namespace {

bool supported_dim(Eigen::Index d) { return d == 2 || d == 4 || d == 8 || d == 16; }

void check_same_dim(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("operator dimensions differ: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

}  // namespace

Operator::Operator(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || !supported_dim(m_.rows())) {
    throw DimensionError("operator must be square with dim in {2,4,8,16}, got " +
                         std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()));
  }
  if (!m_.allFinite()) throw InvariantError("operator has non-finite entries");
}

Operator Operator::identity(int dim) { return Operator(ComplexMatrix::Identity(dim, dim)); }

Operator Operator::zero(int dim) { return Operator(ComplexMatrix::Zero(dim, dim)); }

Operator Operator::projector(const StateVector& v) { return Operator(v * v.adjoint()); }

Operator Operator::basis_outer(int dim, int row, int col) {
  if (row < 0 || row >= dim || col < 0 || col >= dim) {
    throw DomainError("basis index out of range");
  }
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  m(row, col) = 1.0;
  return Operator(std::move(m));
}

Operator Operator::diagonal(const std::vector<double>& diag) {
  const auto n = static_cast<Eigen::Index>(diag.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
  return Operator(std::move(m));
}

int Operator::num_qubits() const noexcept {
  int n = 0;
  for (int d = dim(); d > 1; d >>= 1) ++n;
  return n;
}

double Operator::hermiticity_error() const { return (m_ - m_.adjoint()).cwiseAbs().maxCoeff(); }

double Operator::max_abs_diff(const Operator& other) const {
  check_same_dim(*this, other);
  return (m_ - other.m_).cwiseAbs().maxCoeff();
}

Operator& Operator::operator+=(const Operator& rhs) {
  check_same_dim(*this, rhs);
  m_ += rhs.m_;
  return *this;
}

Operator& Operator::operator-=(const Operator& rhs) {
  check_same_dim(*this, rhs);
  m_ -= rhs.m_;
  return *this;
}

Operator& Operator::operator*=(Complex s) {
  m_ *= s;
  return *this;
}

Operator operator+(Operator lhs, const Operator& rhs) { return lhs += rhs; }
Operator operator-(Operator lhs, const Operator& rhs) { return lhs -= rhs; }

Operator operator*(const Operator& lhs, const Operator& rhs) {
  check_same_dim(lhs, rhs);
  return Operator(lhs.matrix() * rhs.matrix());
}

Operator operator*(Complex s, Operator op) { return op *= s; }
Operator operator*(Operator op, Complex s) { return op *= s; }

Operator conjugate(const Operator& u, const Operator& a) {
  check_same_dim(u, a);
  return Operator(u.matrix() * a.matrix() * u.matrix().adjoint());
}

Complex trace_product(const Operator& a, const Operator& b) {
  check_same_dim(a, b);
  // tr(AB) = sum_ij A_ij B_ji
  return (a.matrix().array() * b.matrix().transpose().array()).sum();
}

Operator tensor(const Operator& a, const Operator& b) {
  const int da = a.dim();
  const int db = b.dim();
  if (da * db > kMaxDim) {
    throw DimensionError("tensor product dimension " + std::to_string(da * db) +
                         " exceeds " + std::to_string(kMaxDim));
  }
  ComplexMatrix m(da * db, da * db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      m.block(i * db, j * db, db, db) = a(i, j) * b.matrix();
    }
  }
  return Operator(std::move(m));
}

Operator tensor(std::initializer_list<Operator> factors) {
  if (factors.size() == 0) throw DomainError("tensor of an empty factor list");
  auto it = factors.begin();
  Operator result = *it++;
  for (; it != factors.end(); ++it) result = tensor(result, *it);
  return result;
}

namespace pauli {

Operator identity() { return Operator::identity(2); }

Operator x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return Operator(std::move(m));
}

Operator y() {
  const Complex i(0.0, 1.0);
  ComplexMatrix m(2, 2);
  m << 0, -i, i, 0;
  return Operator(std::move(m));
}

Operator z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return Operator(std::move(m));
}

}  // namespace pauli

StateVector basis_state(int dim, int index) {
  if (index < 0 || index >= dim) throw DomainError("basis index out of range");
  StateVector v = StateVector::Zero(dim);
  v(index) = 1.0;
  return v;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  StateVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

}  // namespace boundent
