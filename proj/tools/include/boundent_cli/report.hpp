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

#include <string>

#include <nlohmann/json.hpp>

#include "boundent_cli/config.hpp"

namespace boundent::cli {

inline constexpr const char* kReportSchema = "boundent.report/1";

enum ExitCode : int {
  kExitOk = 0,
  kExitNotDetected = 1,
  kExitInvariant = 2,
};

struct ReportOutcome {
  nlohmann::json document;
  std::string summary;
  int exit_code = kExitOk;
};

/// prepare -> noise -> simulate -> reconstruct -> peel -> PPT -> witness ->
/// metrics. Deterministic given the config. Library errors raised along the
/// way are caught and reported with exit code 2.
ReportOutcome cmd_report(const RunConfig& config);

}  // namespace boundent::cli
