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
#include <string>
#include <string_view>
#include <vector>

#include "boundent/operator.hpp"
#include "boundent/density_operator.hpp"

namespace boundent {

/// Per-spin operation applied before acquisition: identity or pi/2 about x/y.
enum class ReadoutRotation { kE, kX, kY };

/// Spin whose signal is read out through the carbon channel.
enum class Spin { kC = 1, kH = 2, kF = 3 };

Spin parse_spin(std::string_view s);
std::string_view to_string(Spin s);

/// The seven rotation patterns of the standard readout set.
inline constexpr std::array<std::string_view, 7> kStandardSettingIds = {
    "Y1E2E3", "E1E2Y3", "E1E2X3", "Y1Y2E3", "E1X2X3", "Y1Y2Y3", "X1X2X3"};

class ReadoutSetting {
 public:
  ReadoutSetting(std::array<ReadoutRotation, 3> rotations, Spin detect);

  /// Parses ids of the form "Y1E2E3". Any E/X/Y pattern is accepted; see
  /// is_standard(). Throws DomainError on malformed ids.
  static ReadoutSetting from_id(std::string_view id, Spin detect = Spin::kC);

  const std::array<ReadoutRotation, 3>& rotations() const noexcept { return rotations_; }
  Spin detect() const noexcept { return detect_; }
  std::string id() const;
  bool is_standard() const;

  friend bool operator==(const ReadoutSetting&, const ReadoutSetting&) = default;

 private:
  std::array<ReadoutRotation, 3> rotations_;
  Spin detect_;
};

/// The 7 rotation patterns, each detected on C, H and F (21 experiments).
std::vector<ReadoutSetting> standard_settings();

/// Product of exp(-i pi/2 I_{x|y}) per spin, followed by SWAP(C, detect)
/// when the detected spin is not carbon.
Operator readout_unitary(const ReadoutSetting& setting);

/// SWAP of two qubits (1-based) in a three-qubit register.
Operator swap_gate(int qubit_a, int qubit_b);

enum class Quadrature { kX, kY };

/// Line-resolved transverse observable detected on qubit 1:
/// sigma_{x|y} (x) |j><j| with j = two-bit state of qubits 2 and 3.
Operator line_observable(int line, Quadrature quad);

/// Number of values produced per experiment: 4 lines x 2 quadratures.
inline constexpr int kValuesPerSetting = 8;

/// tr[(sigma_q (x) Pi_j) R rho R^dagger] ordered (line 0 x, line 0 y,
/// line 1 x, ...).
std::array<double, kValuesPerSetting> measure(const DensityOperator& rho, const ReadoutSetting& setting);
std::array<double, kValuesPerSetting> measure_with_unitary(const DensityOperator& rho, const Operator& readout);

}  // namespace boundent
