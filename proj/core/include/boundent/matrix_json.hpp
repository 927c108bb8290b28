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

#include <nlohmann/json.hpp>

#include "boundent/operator.hpp"

namespace boundent {

/// {"dim": n, "re": [[...]], "im": [[...]]}, row-major.
nlohmann::json to_json(const Operator& op);

/// Inverse of to_json. Extra keys are ignored. Throws DomainError on a
/// malformed object.
Operator operator_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Eigen::MatrixXd& m);

}  // namespace boundent
