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

#include "boundent_cli/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "boundent/errors.hpp"
#include "boundent/matrix_json.hpp"
#include "boundent/metrics.hpp"
#include "boundent/tomography.hpp"
#include "boundent/witness.hpp"
#include "boundent_cli/commands.hpp"
#include "boundent_cli/io.hpp"

namespace boundent::cli {

namespace {

constexpr double kWeldTolerance = 1e-12;

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

nlohmann::json config_json(const RunConfig& c) {
  return {{"a", c.a},       {"epsilon", c.epsilon},   {"p", c.p},
          {"sigma", c.sigma}, {"depolarizing", c.depolarizing}, {"seed", c.seed},
          {"project", c.project}};
}

double max_imaginary(const Operator& op) {
  return op.matrix().imag().cwiseAbs().maxCoeff();
}

std::string failure_summary(const RunConfig& c, const std::string& stage, const std::string& message) {
  std::ostringstream os;
  os << "boundent report (" << kReportSchema << ")\n"
     << "  a = " << c.a << "  epsilon = " << c.epsilon << "  p = " << c.p << "\n"
     << "  FAILED at " << stage << ": " << message << "\n";
  return os.str();
}

}  // namespace

ReportOutcome cmd_report(const RunConfig& c) {
  ReportOutcome out;
  nlohmann::json& doc = out.document;
  doc["schema"] = kReportSchema;
  doc["config"] = config_json(c);

  std::string stage = "config";
  auto fail = [&](const std::string& message) {
    doc["error"] = {{"stage", stage}, {"message", message}};
    out.summary = failure_summary(c, stage, message);
    out.exit_code = kExitInvariant;
    return out;
  };

  try {
    c.validate();
    if (!(c.p > 0.0)) {
      stage = "peel";
      std::ostringstream os;
      os << "p = " << c.p << " leaves no deviation to peel from the identity; refusing to continue";
      return fail(os.str());
    }

    stage = "prepare";
    const PreparationRun run = prepare_for_fraction(c.a, c.p);
    const bool prep_ok = run.weights.feasible && run.weld_error <= kWeldTolerance;
    doc["preparation"] = {{"kappa", run.kappa},
                          {"weights", run.weights.q},
                          {"weights_residual", run.weights.residual},
                          {"weld_error", run.weld_error},
                          {"ok", prep_ok}};

    stage = "simulate";
    const DensityOperator noisy = depolarize(run.prepared, c.depolarizing);
    const auto settings = standard_settings();
    const TomographyDataset data = generate_dataset(noisy, settings, c.sigma * c.p, c.seed);

    stage = "reconstruct";
    const ReconstructionResult rec = reconstruct(data);

    stage = "peel";
    const DensityOperator peeled = peel_identity(rec.rho_hat, c.p);
    const DensityOperator analysed = c.project ? project_to_physical(peeled.op()) : peeled;

    stage = "analyse";
    const PptReport ppt = is_ppt(analysed);
    const StateParams params = StateParams::symmetric(c.a);
    const Operator w = witness({params, c.epsilon});
    const Operator w_nmr = pseudo_witness(w, c.p, 8);
    const double w_value = expectation(w, analysed);
    const double w_error = propagate_witness_error(rec, w_nmr);
    const DensityOperator ideal = acin_state(params);
    const double fidelity = uhlmann_fidelity(ideal, analysed);
    const double distance = trace_distance(ideal, analysed);

    doc["reconstruction"] = {{"records", data.records.size()},
                             {"residual_norm", rec.residual_norm},
                             {"min_eigenvalue", peeled.min_eigenvalue()},
                             {"max_imaginary", max_imaginary(analysed.op())},
                             {"state", to_json(analysed.op())}};
    doc["ppt"] = to_json(ppt);
    doc["witness"] = {{"value", w_value},
                      {"error", w_error},
                      {"pseudo_value", expectation(w_nmr, rec.rho_hat)},
                      {"detected", w_value < -kDetectionTolerance},
                      {"reference", kReferenceWitness},
                      {"reference_error", kReferenceWitnessError}};
    doc["fidelity"] = {{"value", fidelity}, {"reference", kReferenceFidelity}};
    doc["trace_distance"] = {{"value", distance}, {"reference", kReferenceTraceDistance}};

    if (!prep_ok || !ppt.all_ppt()) {
      out.exit_code = kExitInvariant;
    } else if (!(w_value < -kDetectionTolerance)) {
      out.exit_code = kExitNotDetected;
    }
    doc["exit_code"] = out.exit_code;

    std::ostringstream os;
    os << "boundent report (" << kReportSchema << ")\n"
       << "  a = " << c.a << "  epsilon = " << c.epsilon << "  p = " << sci(c.p)
       << "  lambda = " << fixed(c.depolarizing, 4) << "  sigma = " << fixed(c.sigma, 4)
       << "  seed = " << c.seed << (c.project ? "  projected" : "") << "\n"
       << "  preparation   weld " << sci(run.weld_error) << "  residual " << sci(run.weights.residual)
       << (prep_ok ? "  [ok]" : "  [FAIL]") << "\n"
       << "  PPT          ";
    for (const auto& cut : ppt.cuts) {
      os << " " << cut.label << " " << sci(cut.min_eigenvalue) << (cut.ppt ? " [ok]" : " [FAIL]");
    }
    os << "   (reference: PPT on every cut)\n"
       << "  <W>           " << fixed(w_value, 4) << "   (reference " << fixed(kReferenceWitness, 3) << ")\n"
       << "  sigma_<W>     " << fixed(w_error, 4) << "   (reference " << fixed(kReferenceWitnessError, 3)
       << ")\n"
       << "  F_u           " << fixed(fidelity, 4) << "   (reference " << fixed(kReferenceFidelity, 2) << ")\n"
       << "  d_t           " << fixed(distance, 4) << "   (reference " << fixed(kReferenceTraceDistance, 2)
       << ")\n"
       << "  verdict       "
       << (out.exit_code == kExitOk          ? "entanglement detected, PPT on every cut"
           : out.exit_code == kExitNotDetected ? "PPT on every cut, witness not negative"
                                               : "invariant violated")
       << "\n";
    out.summary = os.str();
    return out;
  } catch (const Error& e) {
    return fail(e.what());
  }
}

}  // namespace boundent::cli
