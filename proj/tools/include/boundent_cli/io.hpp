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

#include <nlohmann/json.hpp>

#include "boundent/acin_states.hpp"
#include "boundent/density_operator.hpp"
#include "boundent/matrix_json.hpp"
#include "boundent/operator.hpp"

namespace boundent::cli {

using boundent::to_json;

/// Reads a JSON document; "-" reads standard input. Throws DomainError if
/// the file cannot be opened or parsed.
nlohmann::json read_json_file(const std::string& path);

/// Writes to `path`, or to standard output when it is empty or "-".
void write_json(const nlohmann::json& doc, const std::string& path);

/// A bare matrix object or any object holding one under "state".
Operator operator_from_document(const nlohmann::json& doc);

/// Loads a state file as a density operator at the given tolerance.
DensityOperator read_state(const std::string& path, double tolerance = kReconstructionTolerance);

/// {"a1": .., "a2": .., "a3": .., "p": ..}; "p" is optional.
struct ParamBlob {
  StateParams a{};
  std::optional<double> p;
};

nlohmann::json to_json(const ParamBlob& blob);
/// Throws DomainError on missing or non-numeric fields.
ParamBlob param_blob_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PptReport& report);

}  // namespace boundent::cli
