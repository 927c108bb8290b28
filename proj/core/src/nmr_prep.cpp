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

#include "boundent/nmr_prep.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "boundent/errors.hpp"
#include "boundent/metrics.hpp"
#include "boundent/simplex_lsq.hpp"

namespace boundent {
namespace {

constexpr double kHbar = 1.054571817e-34;     // J s
constexpr double kBoltzmann = 1.380649e-23;   // J / K
constexpr double kMaxKappa = 1e-3;

Eigen::VectorXd vectorize(const Operator& op) {
  const int d = op.dim();
  Eigen::VectorXd v(2 * d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      v(2 * (i * d + j)) = op(i, j).real();
      v(2 * (i * d + j) + 1) = op(i, j).imag();
    }
  }
  return v;
}

double max_off_diagonal(const Operator& op) {
  ComplexMatrix m = op.matrix();
  m.diagonal().setZero();
  return m.cwiseAbs().maxCoeff();
}

void require_symmetric(const StateParams& params) {
  params.validate();
  if (!params.symmetric()) throw DomainError("diagonal target requires a1 = a2 = a3");
}

// U^dagger rho_be U at p = 1, checked to be diagonal.
Operator diagonal_preimage(const StateParams& params) {
  const Operator u = preparation_unitary();
  Operator d = conjugate(u.adjoint(), acin_state(params).op());
  const double off = max_off_diagonal(d);
  if (off > 1e-12) {
    std::ostringstream os;
    os << "conjugated target is not diagonal (max off-diagonal " << off << ")";
    throw InvariantError(os.str());
  }
  return d;
}

}  // namespace

std::array<double, 3> polarizations(const SpinSystem& sys, double b0_tesla, double temperature_kelvin) {
  if (!(b0_tesla > 0.0) || !(temperature_kelvin > 0.0)) {
    throw DomainError("equilibrium state needs B0 > 0 and T > 0");
  }
  std::array<double, 3> kappa{};
  for (std::size_t i = 0; i < 3; ++i) {
    kappa[i] = kHbar * b0_tesla * sys.gammas[i] / (kBoltzmann * temperature_kelvin);
  }
  return kappa;
}

DensityOperator equilibrium_state(const SpinSystem& sys, double b0_tesla, double temperature_kelvin) {
  const auto kappa = polarizations(sys, b0_tesla, temperature_kelvin);
  Operator m = Operator::identity(8);
  for (int i = 0; i < 3; ++i) m += kappa[static_cast<std::size_t>(i)] * spin_operator(i + 1, Axis::kZ);
  return DensityOperator((1.0 / 8.0) * m);
}

Operator DiagonalStateSpec::deviation() const {
  Operator dev = Operator::zero(8);
  for (ZTerm t : kAllZTerms) dev += (scale / 8.0 * coefficient(t)) * z_product(t);
  return dev;
}

DensityOperator DiagonalStateSpec::density() const {
  return DensityOperator((1.0 / 8.0) * Operator::identity(8) + deviation());
}

DiagonalStateSpec DiagonalStateSpec::from_state(const DensityOperator& rho, double scale, double diag_tol) {
  if (rho.dim() != 8) throw DimensionError("diagonal state spec needs a three-qubit state");
  if (!(scale > 0.0)) throw DomainError("diagonal state scale must be positive");
  const double off = max_off_diagonal(rho.op());
  if (off > diag_tol) {
    std::ostringstream os;
    os << "state is not diagonal (max off-diagonal " << off << ")";
    throw InvariantError(os.str());
  }
  DiagonalStateSpec spec;
  spec.scale = scale;
  for (ZTerm t : kAllZTerms) {
    const Operator b = z_product(t);
    const double weight = trace_product(rho.op(), b).real() / trace_product(b, b).real();
    spec.coefficients[static_cast<std::size_t>(t)] = 8.0 * weight / scale;
  }
  return spec;
}

InitialStateRecipe InitialStateRecipe::nominal() {
  InitialStateRecipe r;
  auto set = [&](int state, ZTerm t, double c) {
    r.coefficients[static_cast<std::size_t>(state)][static_cast<std::size_t>(t)] = c;
  };
  set(0, ZTerm::kZ1Z2Z3, 3.77);
  set(1, ZTerm::kZ1Z2, -2.0);
  set(2, ZTerm::kZ1Z3, -1.88);
  set(3, ZTerm::kZ2Z3, -2.0);
  set(4, ZTerm::kZ1, -1.0);
  set(4, ZTerm::kZ2, -0.27);
  set(4, ZTerm::kZ3, -0.27);
  return r;
}

InitialStateRecipe InitialStateRecipe::matched(const StateParams& params) {
  const DiagonalStateSpec target = target_diagonal(params, 0.5);
  const double z1 = target.coefficient(ZTerm::kZ1);
  if (z1 == 0.0) throw DomainError("target has no Iz1 component to match");
  InitialStateRecipe r = nominal();
  r.coefficients[4][static_cast<std::size_t>(ZTerm::kZ2)] = -target.coefficient(ZTerm::kZ2) / z1;
  r.coefficients[4][static_cast<std::size_t>(ZTerm::kZ3)] = -target.coefficient(ZTerm::kZ3) / z1;
  return r;
}

std::vector<DensityOperator> initial_states(double kappa, const InitialStateRecipe& recipe) {
  if (!(kappa > 0.0) || kappa > kMaxKappa) {
    std::ostringstream os;
    os << "initial-state scale " << kappa << " outside (0, " << kMaxKappa << "]";
    throw DomainError(os.str());
  }
  std::vector<DensityOperator> states;
  states.reserve(recipe.coefficients.size());
  for (const auto& c : recipe.coefficients) {
    DiagonalStateSpec spec{c, kappa};
    states.push_back(spec.density());
  }
  return states;
}

std::vector<DensityOperator> initial_states(const SpinSystem& sys, const InitialStateRecipe& recipe) {
  return initial_states(sys.kappa_h, recipe);
}

Operator preparation_unitary() {
  const double h = 1.0 / std::numbers::sqrt2;
  const Complex i(0.0, 1.0);
  ComplexMatrix u = ComplexMatrix::Zero(8, 8);
  u(0b000, 0b000) = h;
  u(0b000, 0b100) = h;
  u(0b111, 0b000) = -h;
  u(0b111, 0b100) = h;
  u(0b001, 0b001) = i;
  u(0b010, 0b010) = -i;
  u(0b011, 0b011) = 1.0;
  u(0b100, 0b111) = 1.0;
  u(0b101, 0b110) = i;
  u(0b110, 0b101) = -i;
  return Operator(std::move(u));
}

DiagonalStateSpec target_diagonal(const StateParams& params, double p) {
  require_symmetric(params);
  if (!(p > 0.0 && p < 1.0)) throw DomainError("diagonal target needs p in (0, 1)");
  const PseudoState target = pseudo_state(acin_state(params), p);
  const DensityOperator rho_d(conjugate(preparation_unitary().adjoint(), target.rho.op()));
  return DiagonalStateSpec::from_state(rho_d, p);
}

WeightSolution solve_temporal_weights(std::span<const DensityOperator> initial,
                                      const DiagonalStateSpec& target, double threshold) {
  if (initial.empty()) throw DomainError("temporal averaging needs at least one input state");
  const DensityOperator rho_d = target.density();
  Eigen::MatrixXd a(2 * 64, static_cast<Eigen::Index>(initial.size()));
  for (std::size_t k = 0; k < initial.size(); ++k) {
    if (initial[k].dim() != 8) throw DimensionError("temporal averaging inputs must be 8x8");
    a.col(static_cast<Eigen::Index>(k)) = vectorize(initial[k].op());
  }
  const ConstrainedLsq fit = simplex_least_squares(a, vectorize(rho_d.op()));

  WeightSolution sol;
  sol.q.assign(fit.x.data(), fit.x.data() + fit.x.size());
  Operator averaged = Operator::zero(8);
  for (std::size_t k = 0; k < initial.size(); ++k) averaged += sol.q[k] * initial[k].op();
  sol.residual = (averaged.matrix() - rho_d.matrix()).norm();

  const Operator mixed = (1.0 / 8.0) * Operator::identity(8);
  const Operator fit_dev = averaged - mixed;
  const Operator target_dev = rho_d.op() - mixed;
  const double norm2 = trace_product(target_dev.adjoint(), target_dev).real();
  sol.achieved_p = norm2 > 0.0 ? target.scale * trace_product(target_dev.adjoint(), fit_dev).real() / norm2 : 0.0;
  sol.feasible = sol.residual <= threshold;
  return sol;
}

double achievable_fraction(std::span<const DensityOperator> initial, const StateParams& params) {
  require_symmetric(params);
  if (initial.empty()) throw DomainError("temporal averaging needs at least one input state");
  const Operator mixed = (1.0 / 8.0) * Operator::identity(8);
  const Operator direction = diagonal_preimage(params) - mixed;
  Eigen::MatrixXd a(2 * 64, static_cast<Eigen::Index>(initial.size()));
  for (std::size_t k = 0; k < initial.size(); ++k) {
    a.col(static_cast<Eigen::Index>(k)) = vectorize(initial[k].op() - mixed);
  }
  const ConstrainedLsq fit = nonnegative_least_squares(a, vectorize(direction));
  const double total = fit.x.sum();
  if (!(total > 0.0)) throw DomainError("inputs cannot reach the target deviation direction");
  return 1.0 / total;
}

PreparationFactors factor_preparation() {
  const Operator u = preparation_unitary();
  ComplexMatrix v = ComplexMatrix::Identity(8, 8);
  const Operator rot = spin_rotation(Axis::kY, -std::numbers::pi / 2.0);
  const int idx[2] = {0b000, 0b100};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) v(idx[r], idx[c]) = rot(r, c);
  const Operator sel(std::move(v));
  const Operator rest = u * sel.adjoint();

  PreparationFactors f{sel, rest, (rest * sel).max_abs_diff(u), {}};
  for (int col = 0; col < 8; ++col) {
    int hits = 0;
    for (int row = 0; row < 8; ++row) {
      const double mag = std::abs(rest(row, col));
      if (std::abs(mag - 1.0) < 1e-12) {
        f.permutation[static_cast<std::size_t>(col)] = row;
        ++hits;
      } else if (mag > 1e-12) {
        hits = -1;
        break;
      }
    }
    if (hits != 1) throw InvariantError("preparation remainder is not a permutation with phases");
  }
  return f;
}

DensityOperator depolarize(const DensityOperator& rho, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("depolarizing strength must lie in [0, 1]");
  const int d = rho.dim();
  Operator out = (1.0 - lambda) * rho.op();
  out += (lambda / d) * Operator::identity(d);
  return DensityOperator(std::move(out), rho.tolerance(), PsdCheck::kReport);
}

double depolarizing_strength_for_trace_distance(const DensityOperator& rho, double target) {
  // Trace distance to the depolarized state is linear in lambda.
  const double full = trace_distance(rho, DensityOperator::maximally_mixed(rho.dim()));
  if (!(full > 0.0)) throw DomainError("maximally mixed state cannot be depolarized further");
  const double lambda = target / full;
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    std::ostringstream os;
    os << "trace distance " << target << " unreachable by depolarizing (max " << full << ")";
    throw DomainError(os.str());
  }
  return lambda;
}

PreparationRun prepare_pseudo_state(const StateParams& params, double kappa, const InitialStateRecipe& recipe,
                                    std::optional<double> p) {
  require_symmetric(params);
  std::vector<DensityOperator> inputs = initial_states(kappa, recipe);
  const double fraction = p.value_or(achievable_fraction(inputs, params));
  DiagonalStateSpec target = target_diagonal(params, fraction);
  WeightSolution weights = solve_temporal_weights(inputs, target);

  Operator sum = Operator::zero(8);
  for (std::size_t k = 0; k < inputs.size(); ++k) sum += weights.q[k] * inputs[k].op();
  DensityOperator averaged(std::move(sum));
  DensityOperator prepared(conjugate(preparation_unitary(), averaged.op()));
  PseudoState ideal = pseudo_state(acin_state(params), fraction);
  const double weld = prepared.op().max_abs_diff(ideal.rho.op());
  return PreparationRun{params,   kappa,    fraction,          std::move(inputs), std::move(target),
                        std::move(weights), std::move(averaged), std::move(prepared), std::move(ideal), weld};
}

}  // namespace boundent
