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
#include <string_view>

#include "boundent/operator.hpp"

namespace boundent {

enum class Axis { kX, kY, kZ };

Axis parse_axis(std::string_view s);

/// Spin-1/2 angular momentum I_axis = sigma_axis / 2 on `qubit` (1-based) of
/// an n-qubit register.
Operator spin_operator(int qubit, Axis axis, int num_qubits = 3);

/// Longitudinal product-operator terms of three spins, in this order.
enum class ZTerm : int { kZ1, kZ2, kZ3, kZ1Z2, kZ1Z3, kZ2Z3, kZ1Z2Z3 };
inline constexpr int kNumZTerms = 7;
inline constexpr std::array<ZTerm, kNumZTerms> kAllZTerms = {
    ZTerm::kZ1, ZTerm::kZ2, ZTerm::kZ3, ZTerm::kZ1Z2, ZTerm::kZ1Z3, ZTerm::kZ2Z3, ZTerm::kZ1Z2Z3};

/// Product of I_z operators named by the term, e.g. I_z1 I_z3.
Operator z_product(ZTerm term);
std::string_view to_string(ZTerm term);

/// exp(-i angle * I_axis) on a single spin.
Operator spin_rotation(Axis axis, double angle);

}  // namespace boundent
