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
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "boundent/readout.hpp"

namespace boundent {

/// Number of real parameters of a traceless Hermitian 8x8 deviation.
inline constexpr int kNumParameters = 63;

/// One line-resolved quadrature value of one experiment.
struct TomographyRecord {
  ReadoutSetting setting;
  int line = 0;  ///< two-bit state of qubits 2,3 after the readout swap
  Quadrature quad = Quadrature::kX;
  double value = 0.0;
  double sigma = 0.0;
};

struct TomographyDataset {
  std::vector<TomographyRecord> records;
};

/// The 63 non-identity three-qubit Pauli strings, qubit 1 most significant,
/// digits ordered (I, X, Y, Z).
const std::vector<Operator>& pauli_basis();

/// theta_k = tr(op P_k).
Eigen::VectorXd to_parameters(const Operator& op);
/// (1 + sum_k theta_k P_k) / 8.
Operator from_parameters(const Eigen::VectorXd& theta);

struct DesignMatrix {
  Eigen::MatrixXd a;  ///< rows: records, columns: Pauli parameters
  int rank = 0;
  int deficiency = 0;  ///< kNumParameters - rank
};

/// Rows ordered by setting, then line, then quadrature, matching measure().
DesignMatrix design_matrix(std::span<const ReadoutSetting> settings);
/// One row per record of the dataset.
DesignMatrix design_matrix(const TomographyDataset& dataset);

/// measure() values for each setting plus independent N(0, sigma^2) noise.
/// Deterministic per seed. `pre_rotation`, when given, is applied to the
/// state before each readout (as if the readout were R * V).
TomographyDataset generate_dataset(const DensityOperator& rho, std::span<const ReadoutSetting> settings,
                                   double sigma, std::uint64_t seed,
                                   const std::optional<Operator>& pre_rotation = std::nullopt);

struct ReconstructionResult {
  DensityOperator rho_hat;       ///< loose tolerance; positivity reported, not enforced
  Eigen::VectorXd parameters;    ///< estimated theta
  Eigen::MatrixXd covariance;    ///< 63x63 over theta
  double residual_norm = 0.0;    ///< ||A theta - values||_2
};

/// Linear least squares over the 63 Pauli parameters with the trace fixed
/// to 1. Records are weighted by 1/sigma^2 when sigmas differ; the
/// covariance is (A^T S^-1 A)^-1 (sigma^2 (A^T A)^-1 for a common sigma).
/// Throws RankDeficientError if the records do not fix all parameters and
/// DomainError if some but not all sigmas are zero.
ReconstructionResult reconstruct(const TomographyDataset& dataset);

/// Frobenius-nearest unit-trace PSD operator: eigenvalues projected onto
/// the probability simplex.
DensityOperator project_to_physical(const Operator& rho_hat);

/// Coefficients w_k = tr(W P_k) / 8 so that tr(W rho) = tr(W)/8 + w . theta.
Eigen::VectorXd witness_parameters(const Operator& w);

/// sqrt(w^T C w) for the reconstruction covariance C.
double propagate_witness_error(const ReconstructionResult& result, const Operator& w);

nlohmann::json to_json(const TomographyDataset& dataset);
/// Throws DomainError on malformed records or non-standard settings.
TomographyDataset dataset_from_json(const nlohmann::json& j);

}  // namespace boundent
