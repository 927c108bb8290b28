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

#include <optional>
#include <string>
#include <vector>

#include "boundent/operator.hpp"
#include "boundent_cli/config.hpp"

namespace boundent::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Not applicable to this configuration; counts as passed.
  bool skipped = false;
  std::string detail;
};

struct VerifyOptions {
  RunConfig config;
  /// Product-state restarts used when certifying epsilon.
  int restarts = 2000;
  /// Replaces the preparation gate in the consistency check.
  std::optional<Operator> unitary_override;
};

/// The preparation gate with the sign of one nonzero entry flipped.
Operator faulty_preparation_unitary();

std::vector<CheckResult> cmd_verify(const VerifyOptions& options);

/// Fixed-width pass/fail table.
std::string format_table(const std::vector<CheckResult>& checks);

/// 0 when every check passed, 2 otherwise.
int verify_exit_code(const std::vector<CheckResult>& checks);

}  // namespace boundent::cli
