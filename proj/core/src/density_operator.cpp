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

#include "boundent/density_operator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "boundent/errors.hpp"
#include "boundent/spectral.hpp"

namespace boundent {

DensityOperator::DensityOperator(Operator op, double tolerance, PsdCheck psd)
    : op_(std::move(op)), tolerance_(tolerance), min_eigenvalue_(0.0) {
  const double herr = op_.hermiticity_error();
  if (herr > tolerance_) {
    std::ostringstream os;
    os << "density operator is not Hermitian (error " << herr << ", tolerance " << tolerance_ << ")";
    throw InvariantError(os.str());
  }
  const Complex tr = op_.trace();
  if (std::abs(tr - 1.0) > tolerance_) {
    std::ostringstream os;
    os << "density operator trace is " << tr << ", expected 1";
    throw InvariantError(os.str());
  }
  min_eigenvalue_ = boundent::min_eigenvalue(op_, std::max(tolerance_, kHermitianTolerance));
  if (psd == PsdCheck::kEnforce && !is_psd()) {
    std::ostringstream os;
    os << "density operator has eigenvalue " << min_eigenvalue_ << " below -" << tolerance_;
    throw InvariantError(os.str());
  }
}

DensityOperator DensityOperator::pure(const StateVector& v) {
  const double n = v.norm();
  if (n == 0.0) throw DomainError("zero state vector");
  return DensityOperator(Operator::projector(v / n));
}

DensityOperator DensityOperator::maximally_mixed(int dim) {
  return DensityOperator((1.0 / dim) * Operator::identity(dim));
}

Bipartition::Bipartition(std::initializer_list<int> qubits)
    : Bipartition(std::vector<int>(qubits)) {}

Bipartition::Bipartition(std::vector<int> qubits) : qubits_(std::move(qubits)) {
  std::sort(qubits_.begin(), qubits_.end());
  qubits_.erase(std::unique(qubits_.begin(), qubits_.end()), qubits_.end());
  if (qubits_.empty()) throw DomainError("bipartition needs at least one qubit");
  if (qubits_.front() < 1 || qubits_.back() > 4) {
    throw DomainError("bipartition qubit indices must lie in 1..4");
  }
}

Bipartition Bipartition::complement(int num_qubits) const {
  std::vector<int> rest;
  for (int q = 1; q <= num_qubits; ++q) {
    if (!std::binary_search(qubits_.begin(), qubits_.end(), q)) rest.push_back(q);
  }
  return Bipartition(std::move(rest));
}

std::string Bipartition::label(int num_qubits) const {
  std::string out;
  for (int q : qubits_) out += std::to_string(q);
  out += '|';
  for (int q = 1; q <= num_qubits; ++q) {
    if (!std::binary_search(qubits_.begin(), qubits_.end(), q)) out += std::to_string(q);
  }
  return out;
}

namespace {

int qubit_mask(const std::vector<int>& qubits, int num_qubits) {
  int mask = 0;
  for (int q : qubits) {
    if (q < 1 || q > num_qubits) {
      throw DomainError("qubit index " + std::to_string(q) + " outside 1.." +
                        std::to_string(num_qubits));
    }
    mask |= 1 << (num_qubits - q);
  }
  return mask;
}

}  // namespace

Operator partial_transpose(const Operator& op, const Bipartition& part) {
  const int n = op.num_qubits();
  const int mask = qubit_mask(part.qubits(), n);
  if (mask == (1 << n) - 1) throw DomainError("bipartition must be a proper subset of the qubits");
  const int d = op.dim();
  ComplexMatrix out(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const int ti = (i & ~mask) | (j & mask);
      const int tj = (j & ~mask) | (i & mask);
      out(ti, tj) = op(i, j);
    }
  }
  return Operator(std::move(out));
}

Operator partial_transpose(const DensityOperator& rho, const Bipartition& part) {
  return partial_transpose(rho.op(), part);
}

Operator partial_trace(const Operator& op, const std::vector<int>& traced_qubits) {
  const int n = op.num_qubits();
  const int mask = qubit_mask(traced_qubits, n);
  const int kept = n - std::popcount(static_cast<unsigned>(mask));
  if (kept < 1) throw DomainError("partial trace must keep at least one qubit");

  auto compress = [&](int index) {
    int out = 0;
    for (int bit = n - 1; bit >= 0; --bit) {
      if (mask & (1 << bit)) continue;
      out = (out << 1) | ((index >> bit) & 1);
    }
    return out;
  };

  const int d = op.dim();
  ComplexMatrix out = ComplexMatrix::Zero(1 << kept, 1 << kept);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if ((i & mask) == (j & mask)) out(compress(i), compress(j)) += op(i, j);
    }
  }
  return Operator(std::move(out));
}

bool PptReport::all_ppt() const {
  return std::all_of(cuts.begin(), cuts.end(), [](const CutVerdict& c) { return c.ppt; });
}

PptReport is_ppt(const DensityOperator& rho) { return is_ppt(rho, rho.tolerance()); }

PptReport is_ppt(const DensityOperator& rho, double tolerance) {
  if (rho.dim() != 8) throw DimensionError("PPT report is defined for three-qubit states");
  PptReport report;
  for (int q = 1; q <= 3; ++q) {
    const Bipartition cut{q};
    const double lmin = min_eigenvalue(partial_transpose(rho, cut), std::max(tolerance, kHermitianTolerance));
    report.cuts[static_cast<std::size_t>(q - 1)] = {cut.label(3), lmin, lmin >= -tolerance};
  }
  return report;
}

}  // namespace boundent
