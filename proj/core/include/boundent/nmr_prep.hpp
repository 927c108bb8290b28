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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boundent/acin_states.hpp"
#include "boundent/spin_operators.hpp"

namespace boundent {

/// Heteronuclear three-spin register; qubit 1 = C, 2 = H, 3 = F.
struct SpinSystem {
  std::array<std::string, 3> labels{"C", "H", "F"};
  /// Gyromagnetic ratios in T^-1 s^-1, indexed like the qubits.
  std::array<double, 3> gammas{6.73e7, 26.75e7, 25.18e7};
  /// Scalar couplings in Hz.
  double j12 = 161.3;
  double j13 = -190.2;
  double j23 = 47.0;
  /// Proton polarization used to scale the prepared diagonal states.
  double kappa_h = 8.4e-5;
};

/// kappa_i = hbar B0 gamma_i / (k T), indexed like the qubits.
std::array<double, 3> polarizations(const SpinSystem& sys, double b0_tesla, double temperature_kelvin);

/// (1 + sum_i kappa_i I_zi) / 8. Throws DomainError unless B0, T > 0.
DensityOperator equilibrium_state(const SpinSystem& sys, double b0_tesla, double temperature_kelvin);

/// Diagonal state 1/8 + scale/8 * sum_k coefficients[k] * z_product(k).
struct DiagonalStateSpec {
  std::array<double, kNumZTerms> coefficients{};
  double scale = 0.0;

  double coefficient(ZTerm t) const { return coefficients[static_cast<std::size_t>(t)]; }
  Operator deviation() const;
  DensityOperator density() const;

  /// Reads the product-operator coefficients of rho by tr(rho B)/tr(B B).
  /// Throws InvariantError if rho has off-diagonal entries above `diag_tol`.
  static DiagonalStateSpec from_state(const DensityOperator& rho, double scale, double diag_tol = 1e-12);
};

/// Product-operator coefficients of the five temporally averaged inputs.
struct InitialStateRecipe {
  std::array<std::array<double, kNumZTerms>, 5> coefficients{};

  /// The nominal inputs:
  ///   1: 3.77 Iz1Iz2Iz3   2: -2 Iz1Iz2   3: -1.88 Iz1Iz3   4: -2 Iz2Iz3
  ///   5: -Iz1 - 0.27 Iz2 - 0.27 Iz3
  static InitialStateRecipe nominal();

  /// The nominal inputs with the two-digit 0.27 of input 5 replaced by the
  /// ratio of the target's Iz2 and Iz1 coefficients, so the target is
  /// exactly reachable by temporal averaging.
  static InitialStateRecipe matched(const StateParams& params);
};

/// The five diagonal initial states 1/8 + kappa/8 * (recipe deviation).
/// Throws DomainError for kappa outside (0, 1e-3] and InvariantError if a
/// state is not positive semidefinite.
std::vector<DensityOperator> initial_states(double kappa,
                                            const InitialStateRecipe& recipe = InitialStateRecipe::nominal());
std::vector<DensityOperator> initial_states(const SpinSystem& sys,
                                            const InitialStateRecipe& recipe = InitialStateRecipe::nominal());

/// The 8x8 preparation gate: maps |100> to |GHZ>, |000> to |GHZ->,
/// |111> to |100>, |110> to i|101>, |101> to -i|110>, and applies phases
/// i, -i, 1 to |001>, |010>, |011>.
Operator preparation_unitary();

/// The diagonal state rho_d with U rho_d U^dagger = pseudo_state(acin_state(a), p).
///
/// Obtained by conjugating the target with U^dagger; the coefficients are
/// read off the result. Requires a1 = a2 = a3 and p in (0, 1). Throws
/// InvariantError if the conjugated target is not diagonal to 1e-12.
DiagonalStateSpec target_diagonal(const StateParams& params, double p);

struct WeightSolution {
  std::vector<double> q;
  double residual = 0.0;  ///< || sum q_i rho_i - rho_d ||_F
  double achieved_p = 0.0;
  bool feasible = false;  ///< residual <= threshold
};

/// Temporal-averaging weights: min ||sum q_i rho_i - rho_d||_F subject to
/// q_i >= 0 and sum q_i = 1. achieved_p is the projection of the averaged
/// deviation onto the target's deviation direction, times target.scale.
WeightSolution solve_temporal_weights(std::span<const DensityOperator> initial,
                                      const DiagonalStateSpec& target, double threshold = 1e-10);

/// Largest p for which the averaged inputs reproduce the target direction:
/// p = 1 / sum w_i with w >= 0 solving sum w_i (rho_i - 1/8) = D(a), where
/// D(a) is the diagonal deviation at p = 1.
double achievable_fraction(std::span<const DensityOperator> initial, const StateParams& params);

struct PreparationFactors {
  Operator selective_rotation;  ///< -pi/2 about y in span{|000>, |100>}
  Operator cnot_like;           ///< U * selective_rotation^dagger
  double product_error = 0.0;   ///< max |cnot_like * selective_rotation - U|
  /// cnot_like maps |k> to a phase times |permutation[k]>.
  std::array<int, 8> permutation{};
};

/// Splits U into the selective rotation and a monomial (permutation times
/// phases) gate. Throws InvariantError if the remainder is not monomial.
PreparationFactors factor_preparation();

/// (1 - lambda) rho + lambda 1/d. Throws DomainError unless lambda in [0, 1].
DensityOperator depolarize(const DensityOperator& rho, double lambda);

/// lambda with trace_distance(rho, depolarize(rho, lambda)) = target.
double depolarizing_strength_for_trace_distance(const DensityOperator& rho, double target);

/// Full simulated preparation of the pseudo state from the five inputs.
struct PreparationRun {
  StateParams params{};
  double kappa = 0.0;
  double p = 0.0;
  std::vector<DensityOperator> inputs;
  DiagonalStateSpec target;
  WeightSolution weights;
  DensityOperator averaged;  ///< sum q_i rho_i
  DensityOperator prepared;  ///< U averaged U^dagger
  PseudoState ideal;         ///< pseudo_state(acin_state(params), p)
  double weld_error = 0.0;   ///< max |prepared - ideal|
};

/// Runs the preparation for symmetric params. When `p` is empty the
/// achievable fraction of the inputs is used.
PreparationRun prepare_pseudo_state(const StateParams& params, double kappa,
                                    const InitialStateRecipe& recipe, std::optional<double> p = std::nullopt);

}  // namespace boundent
