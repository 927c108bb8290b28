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

#include "boundent/readout.hpp"

#include <algorithm>
#include <numbers>

#include "boundent/errors.hpp"
#include "boundent/spin_operators.hpp"

namespace boundent {

Spin parse_spin(std::string_view s) {
  if (s == "C") return Spin::kC;
  if (s == "H") return Spin::kH;
  if (s == "F") return Spin::kF;
  throw DomainError("unknown detect spin '" + std::string(s) + "' (expected C, H or F)");
}

std::string_view to_string(Spin s) {
  switch (s) {
    case Spin::kC:
      return "C";
    case Spin::kH:
      return "H";
    case Spin::kF:
      return "F";
  }
  return "?";
}

ReadoutSetting::ReadoutSetting(std::array<ReadoutRotation, 3> rotations, Spin detect)
    : rotations_(rotations), detect_(detect) {}

ReadoutSetting ReadoutSetting::from_id(std::string_view id, Spin detect) {
  if (id.size() != 6) throw DomainError("readout id must look like Y1E2E3, got '" + std::string(id) + "'");
  std::array<ReadoutRotation, 3> rot{};
  for (int k = 0; k < 3; ++k) {
    const char op = id[static_cast<std::size_t>(2 * k)];
    const char idx = id[static_cast<std::size_t>(2 * k + 1)];
    if (idx != static_cast<char>('1' + k)) throw DomainError("malformed readout id '" + std::string(id) + "'");
    switch (op) {
      case 'E':
        rot[static_cast<std::size_t>(k)] = ReadoutRotation::kE;
        break;
      case 'X':
        rot[static_cast<std::size_t>(k)] = ReadoutRotation::kX;
        break;
      case 'Y':
        rot[static_cast<std::size_t>(k)] = ReadoutRotation::kY;
        break;
      default:
        throw DomainError("malformed readout id '" + std::string(id) + "'");
    }
  }
  return {rot, detect};
}

std::string ReadoutSetting::id() const {
  std::string s;
  for (int k = 0; k < 3; ++k) {
    switch (rotations_[static_cast<std::size_t>(k)]) {
      case ReadoutRotation::kE:
        s += 'E';
        break;
      case ReadoutRotation::kX:
        s += 'X';
        break;
      case ReadoutRotation::kY:
        s += 'Y';
        break;
    }
    s += static_cast<char>('1' + k);
  }
  return s;
}

bool ReadoutSetting::is_standard() const {
  const std::string s = id();
  return std::find(kStandardSettingIds.begin(), kStandardSettingIds.end(), s) != kStandardSettingIds.end();
}

std::vector<ReadoutSetting> standard_settings() {
  std::vector<ReadoutSetting> out;
  for (std::string_view id : kStandardSettingIds) {
    for (Spin s : {Spin::kC, Spin::kH, Spin::kF}) out.push_back(ReadoutSetting::from_id(id, s));
  }
  return out;
}

Operator swap_gate(int qubit_a, int qubit_b) {
  if (qubit_a < 1 || qubit_a > 3 || qubit_b < 1 || qubit_b > 3) throw DomainError("swap qubits must lie in 1..3");
  ComplexMatrix m = ComplexMatrix::Zero(8, 8);
  const int ba = 3 - qubit_a;
  const int bb = 3 - qubit_b;
  for (int k = 0; k < 8; ++k) {
    const int xa = (k >> ba) & 1;
    const int xb = (k >> bb) & 1;
    int t = k & ~((1 << ba) | (1 << bb));
    t |= (xa << bb) | (xb << ba);
    m(t, k) = 1.0;
  }
  return Operator(std::move(m));
}

Operator readout_unitary(const ReadoutSetting& setting) {
  auto single = [](ReadoutRotation r) {
    switch (r) {
      case ReadoutRotation::kX:
        return spin_rotation(Axis::kX, std::numbers::pi / 2.0);
      case ReadoutRotation::kY:
        return spin_rotation(Axis::kY, std::numbers::pi / 2.0);
      case ReadoutRotation::kE:
        break;
    }
    return pauli::identity();
  };
  const auto& r = setting.rotations();
  Operator u = tensor({single(r[0]), single(r[1]), single(r[2])});
  if (setting.detect() != Spin::kC) u = swap_gate(1, static_cast<int>(setting.detect())) * u;
  return u;
}

Operator line_observable(int line, Quadrature quad) {
  if (line < 0 || line > 3) throw DomainError("line index must lie in 0..3");
  ComplexMatrix proj = ComplexMatrix::Zero(4, 4);
  proj(line, line) = 1.0;
  return tensor(quad == Quadrature::kX ? pauli::x() : pauli::y(), Operator(std::move(proj)));
}

std::array<double, kValuesPerSetting> measure_with_unitary(const DensityOperator& rho, const Operator& readout) {
  if (rho.dim() != 8 || readout.dim() != 8) throw DimensionError("readout model is defined for three qubits");
  const Operator rotated = conjugate(readout, rho.op());
  std::array<double, kValuesPerSetting> out{};
  for (int j = 0; j < 4; ++j) {
    out[static_cast<std::size_t>(2 * j)] = trace_product(line_observable(j, Quadrature::kX), rotated).real();
    out[static_cast<std::size_t>(2 * j + 1)] = trace_product(line_observable(j, Quadrature::kY), rotated).real();
  }
  return out;
}

std::array<double, kValuesPerSetting> measure(const DensityOperator& rho, const ReadoutSetting& setting) {
  return measure_with_unitary(rho, readout_unitary(setting));
}

}  // namespace boundent
