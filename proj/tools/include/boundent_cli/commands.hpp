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

#include <cstdint>
#include <optional>

#include <nlohmann/json.hpp>

#include "boundent/nmr_prep.hpp"
#include "boundent/tomography.hpp"
#include "boundent/witness.hpp"
#include "boundent/witness_optimizer.hpp"
#include "boundent_cli/config.hpp"
#include "boundent_cli/io.hpp"

namespace boundent::cli {

/// Preparation from the matched five-input recipe with the proton
/// polarization chosen so that the averaged inputs reach exactly p.
/// Throws DomainError when that polarization leaves the NMR range.
PreparationRun prepare_for_fraction(double a, double p);

/// Acin state, or its pseudo state when the blob carries p.
nlohmann::json cmd_state(const ParamBlob& blob);

nlohmann::json cmd_ppt(const DensityOperator& rho);

/// tr(W rho). With `p`, rho is taken as a pseudo state and the rescaled
/// witness is used instead.
nlohmann::json cmd_witness_eval(const WitnessParams& params, const DensityOperator& rho,
                                std::optional<double> p);

nlohmann::json cmd_witness_optimize(const WitnessOptimizerOptions& options);

nlohmann::json cmd_prepare(double a, double p);

/// Samples the standard readout set; sigma is in the state's own units.
nlohmann::json cmd_tomo_simulate(const DensityOperator& rho, double sigma, std::uint64_t seed);

nlohmann::json cmd_tomo_reconstruct(const TomographyDataset& data, bool project);

nlohmann::json cmd_metrics(const DensityOperator& rho, const DensityOperator& reference);

}  // namespace boundent::cli
