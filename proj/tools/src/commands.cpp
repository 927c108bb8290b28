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

#include "boundent_cli/commands.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "boundent/errors.hpp"
#include "boundent/matrix_json.hpp"
#include "boundent/metrics.hpp"
#include "boundent/spectral.hpp"

namespace boundent::cli {

namespace {

// Polarization the recipe is calibrated against; the fraction is linear in it.
constexpr double kReferenceKappa = 8.4e-5;
constexpr double kMaxKappa = 1e-3;

nlohmann::json coefficients_json(const std::array<double, kNumZTerms>& c) {
  nlohmann::json j = nlohmann::json::object();
  for (ZTerm t : kAllZTerms) j[std::string(to_string(t))] = c[static_cast<std::size_t>(t)];
  return j;
}

}  // namespace

PreparationRun prepare_for_fraction(double a, double p) {
  if (!(p > 0.0) || !(p < 1.0)) throw DomainError("pseudo-state fraction p must lie in (0, 1)");
  const StateParams params = StateParams::symmetric(a);
  params.validate();
  const InitialStateRecipe recipe = InitialStateRecipe::matched(params);
  const auto ref = initial_states(kReferenceKappa, recipe);
  const double kappa = kReferenceKappa * p / achievable_fraction(ref, params);
  if (kappa > kMaxKappa) {
    std::ostringstream os;
    os << "p = " << p << " needs polarization " << kappa << ", above the NMR range " << kMaxKappa;
    throw DomainError(os.str());
  }
  return prepare_pseudo_state(params, kappa, recipe, p);
}

nlohmann::json cmd_state(const ParamBlob& blob) {
  blob.a.validate();
  const DensityOperator rho = acin_state(blob.a);
  nlohmann::json out{{"schema", "boundent.state/1"},
                     {"params", to_json(blob)},
                     {"entangled_regime", blob.a.entangled_regime()},
                     {"rank", numeric_rank(rho.op())}};
  out["state"] = blob.p ? to_json(pseudo_state(rho, *blob.p).rho.op()) : to_json(rho.op());
  return out;
}

nlohmann::json cmd_ppt(const DensityOperator& rho) {
  nlohmann::json out = to_json(is_ppt(rho));
  out["schema"] = "boundent.ppt/1";
  out["tolerance"] = rho.tolerance();
  return out;
}

nlohmann::json cmd_witness_eval(const WitnessParams& params, const DensityOperator& rho,
                                std::optional<double> p) {
  params.validate();
  const Operator w = witness(params);
  const Operator used = p ? pseudo_witness(w, *p, rho.dim()) : w;
  const double value = expectation(used, rho);
  const auto spectrum = eigvalsh(w);
  nlohmann::json out{{"schema", "boundent.witness/1"},
                     {"a", to_json(ParamBlob{params.a, std::nullopt})},
                     {"epsilon", params.epsilon},
                     {"expectation", value},
                     {"detected", value < -kDetectionTolerance},
                     {"witness_trace", w.trace().real()},
                     {"witness_min_eigenvalue", spectrum.front()},
                     {"witness_max_eigenvalue", spectrum.back()}};
  out["pseudo_fraction"] = p ? nlohmann::json(*p) : nlohmann::json(nullptr);
  return out;
}

nlohmann::json cmd_witness_optimize(const WitnessOptimizerOptions& options) {
  const RobustnessReport r = optimize_parameters(options);
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& e : r.trace) {
    trace.push_back({{"a", e.a}, {"epsilon", e.epsilon}, {"noise_threshold", e.noise_threshold}});
  }
  return {{"schema", "boundent.robustness/1"},
          {"a", r.a},
          {"epsilon_certified", r.epsilon_certified},
          {"noise_threshold", r.noise_threshold},
          {"range", {options.range.lo, options.range.hi}},
          {"restarts", options.restarts},
          {"seed", options.seed},
          {"trace", trace}};
}

nlohmann::json cmd_prepare(double a, double p) {
  const PreparationRun run = prepare_for_fraction(a, p);
  nlohmann::json inputs = nlohmann::json::array();
  for (const auto& in : run.inputs) inputs.push_back(to_json(in.op()));
  return {{"schema", "boundent.prepare/1"},
          {"params", to_json(ParamBlob{run.params, run.p})},
          {"kappa", run.kappa},
          {"state", to_json(run.prepared.op())},
          {"target",
           {{"coefficients", coefficients_json(run.target.coefficients)},
            {"scale", run.target.scale},
            {"state", to_json(run.target.density().op())}}},
          {"inputs", inputs},
          {"weights",
           {{"q", run.weights.q},
            {"residual", run.weights.residual},
            {"achieved_p", run.weights.achieved_p},
            {"feasible", run.weights.feasible}}},
          {"unitary", to_json(preparation_unitary())},
          {"weld_error", run.weld_error}};
}

nlohmann::json cmd_tomo_simulate(const DensityOperator& rho, double sigma, std::uint64_t seed) {
  const auto settings = standard_settings();
  return to_json(generate_dataset(rho, settings, sigma, seed));
}

nlohmann::json cmd_tomo_reconstruct(const TomographyDataset& data, bool project) {
  const ReconstructionResult r = reconstruct(data);
  const Operator est = project ? project_to_physical(r.rho_hat.op()).op() : r.rho_hat.op();
  return {{"schema", "boundent.reconstruction/1"},
          {"projected", project},
          {"state", to_json(est)},
          {"min_eigenvalue_before_projection", r.rho_hat.min_eigenvalue()},
          {"residual_norm", r.residual_norm},
          {"records", data.records.size()},
          {"covariance", to_json(r.covariance)}};
}

nlohmann::json cmd_metrics(const DensityOperator& rho, const DensityOperator& reference) {
  return {{"schema", "boundent.metrics/1"},
          {"fidelity", uhlmann_fidelity(reference, rho)},
          {"trace_distance", trace_distance(reference, rho)}};
}

}  // namespace boundent::cli
