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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

#include "boundent/acin_states.hpp"
#include "boundent/errors.hpp"
#include "boundent/matrix_json.hpp"
#include "boundent/metrics.hpp"
#include "boundent_cli/commands.hpp"
#include "boundent_cli/io.hpp"
#include "boundent_cli/report.hpp"
#include "boundent_cli/verify.hpp"
#include "generators.hpp"

namespace boundent::cli {
namespace {

TEST(Report, ExactRunRecoversIdealValues) {
  RunConfig c;
  const ReportOutcome r = cmd_report(c);
  ASSERT_FALSE(r.document.contains("error")) << r.summary;
  EXPECT_EQ(r.document["schema"], kReportSchema);
  EXPECT_NEAR(r.document["witness"]["value"].get<double>(), -0.1069, 1e-4);
  EXPECT_EQ(r.document["witness"]["error"].get<double>(), 0.0);
  EXPECT_NEAR(r.document["fidelity"]["value"].get<double>(), 1.0, 1e-9);
  EXPECT_NEAR(r.document["trace_distance"]["value"].get<double>(), 0.0, 1e-9);
  EXPECT_TRUE(r.document["ppt"]["all_ppt"].get<bool>());
  EXPECT_LE(r.document["preparation"]["weld_error"].get<double>(), 1e-12);
  EXPECT_EQ(r.exit_code, kExitOk);
}

TEST(Report, SummaryHasFiveHeadlines) {
  const std::string s = cmd_report(RunConfig{}).summary;
  for (const char* key : {"PPT", "<W>", "sigma_<W>", "F_u", "d_t"}) {
    EXPECT_NE(s.find(key), std::string::npos) << key;
  }
  EXPECT_NE(s.find("reference"), std::string::npos);
}

TEST(Report, RefusesToPeelAtZeroFraction) {
  RunConfig c;
  c.p = 0.0;
  const ReportOutcome r = cmd_report(c);
  EXPECT_EQ(r.exit_code, kExitInvariant);
  ASSERT_TRUE(r.document.contains("error"));
  EXPECT_EQ(r.document["error"]["stage"], "peel");
  EXPECT_NE(r.summary.find("refusing"), std::string::npos);
}

TEST(Report, OutOfRangeFractionIsReportedNotThrown) {
  RunConfig c;
  c.p = 0.5;
  const ReportOutcome r = cmd_report(c);
  EXPECT_EQ(r.exit_code, kExitInvariant);
  EXPECT_EQ(r.document["error"]["stage"], "prepare");
}

TEST(Report, DeterministicPerSeed) {
  RunConfig c;
  c.sigma = 0.02;
  EXPECT_EQ(cmd_report(c).document.dump(), cmd_report(c).document.dump());
  RunConfig d = c;
  d.seed = 2;
  EXPECT_NE(cmd_report(c).document.dump(), cmd_report(d).document.dump());
}

TEST(Report, DepolarizingAloneShiftsWitnessLinearly) {
  // <W> on the depolarized state: (1 - l) <W>_0 + l tr(W)/8.
  RunConfig c;
  c.depolarizing = 0.1;
  const ReportOutcome r = cmd_report(c);
  const Operator w = witness({StateParams::symmetric(c.a), c.epsilon});
  const double w0 = expectation(w, acin_state(StateParams::symmetric(c.a)));
  const double expected = 0.9 * w0 + 0.1 * w.trace().real() / 8.0;
  EXPECT_NEAR(r.document["witness"]["value"].get<double>(), expected, 1e-9);
}

TEST(Report, NoDetectionGivesExitOne) {
  RunConfig c;
  c.depolarizing = 0.5;
  const ReportOutcome r = cmd_report(c);
  EXPECT_GT(r.document["witness"]["value"].get<double>(), 0.0);
  EXPECT_EQ(r.exit_code, kExitNotDetected);
}

TEST(Report, WitnessErrorScalesWithSigma) {
  RunConfig c;
  c.sigma = 0.01;
  const double e1 = cmd_report(c).document["witness"]["error"].get<double>();
  c.sigma = 0.02;
  const double e2 = cmd_report(c).document["witness"]["error"].get<double>();
  EXPECT_NEAR(e2 / e1, 2.0, 1e-9);
}

TEST(Calibration, HitsReferenceWitnessAndErrorBar) {
  const NoiseCalibration cal = calibrate_to_reference(0.346, 0.1069);
  EXPECT_GT(cal.depolarizing, 0.0);
  EXPECT_LT(cal.depolarizing, 1.0);
  RunConfig c;
  c.depolarizing = cal.depolarizing;
  const ReportOutcome exact = cmd_report(c);
  EXPECT_NEAR(exact.document["witness"]["value"].get<double>(), kReferenceWitness, 1e-9);
  c.sigma = cal.sigma;
  const ReportOutcome noisy = cmd_report(c);
  EXPECT_NEAR(noisy.document["witness"]["error"].get<double>(), kReferenceWitnessError, 1e-9);
}

TEST(Calibration, RejectsUndetectableWitness) {
  EXPECT_THROW(calibrate_to_reference(0.346, 0.0), DomainError);
}

TEST(Verify, DefaultConfigPasses) {
  VerifyOptions o;
  o.restarts = 500;
  const auto checks = cmd_verify(o);
  for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  EXPECT_EQ(verify_exit_code(checks), kExitOk);
  EXPECT_NE(format_table(checks).find("checks passed"), std::string::npos);
}

TEST(Verify, FlippedSignInGateFailsWeld) {
  VerifyOptions o;
  o.restarts = 200;
  o.unitary_override = faulty_preparation_unitary();
  EXPECT_GT(faulty_preparation_unitary().max_abs_diff(preparation_unitary()), 0.5);
  const auto checks = cmd_verify(o);
  int failed = 0;
  for (const auto& c : checks) {
    if (!c.passed) {
      ++failed;
      EXPECT_EQ(c.name.rfind("prepare:", 0), 0u) << c.name;
    }
  }
  EXPECT_GE(failed, 1);
  EXPECT_EQ(verify_exit_code(checks), kExitInvariant);
}

TEST(Verify, SeparableBoundary) {
  VerifyOptions o;
  o.config.a = 1.0;
  o.restarts = 500;
  const auto checks = cmd_verify(o);
  for (const auto& c : checks) {
    EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    if (c.name == "states: entanglement flag") EXPECT_NE(c.detail.find("off"), std::string::npos);
    if (c.name == "witness: detection matches entanglement flag") {
      EXPECT_NE(c.detail.find("not detected"), std::string::npos);
    }
    if (c.name == "states: PPT on every cut") EXPECT_FALSE(c.skipped);
    // Iz1Iz2Iz3 of the target is 48 / (3a^2 + 2a + 3) - 8 < 0 at a = 1.
    if (c.name.rfind("report:", 0) == 0) EXPECT_TRUE(c.skipped) << c.name;
  }
  EXPECT_EQ(verify_exit_code(checks), kExitOk);
}

TEST(Commands, WitnessEvalAtBoundaryIsNotDetected) {
  const StateParams a = StateParams::symmetric(1.0);
  const nlohmann::json j = cmd_witness_eval({a, 0.0}, acin_state(a), std::nullopt);
  EXPECT_NEAR(j["expectation"].get<double>(), 0.0, 1e-12);
  EXPECT_FALSE(j["detected"].get<bool>());
}

TEST(Commands, StateBlobAndPseudoState) {
  const nlohmann::json s = cmd_state({StateParams::symmetric(0.346), std::nullopt});
  EXPECT_EQ(s["rank"], 7);
  EXPECT_TRUE(s["entangled_regime"].get<bool>());
  const double p = 1e-3;
  const nlohmann::json ps = cmd_state({StateParams::symmetric(0.346), p});
  const Operator rho = operator_from_document(ps);
  EXPECT_NEAR(rho(0, 0).real(), (1.0 - p) / 8.0 + p * acin_state(StateParams::symmetric(0.346)).op()(0, 0).real(),
              1e-15);
  EXPECT_DOUBLE_EQ(param_blob_from_json(ps["params"]).p.value(), p);
}

TEST(Commands, ParamBlobRejectsMissingFields) {
  EXPECT_THROW(param_blob_from_json(nlohmann::json{{"a1", 1.0}}), DomainError);
  EXPECT_THROW(param_blob_from_json(nlohmann::json::array()), DomainError);
}

TEST(Commands, OperatorDocumentAcceptsBothShapes) {
  testing::Rng rng(3);
  const Operator op = testing::random_density(rng, 8).op();
  const nlohmann::json bare = to_json(op);
  EXPECT_EQ(operator_from_document(bare).max_abs_diff(op), 0.0);
  EXPECT_EQ(operator_from_document(nlohmann::json{{"state", bare}}).max_abs_diff(op), 0.0);
}

TEST(Commands, PrepareReachesRequestedFraction) {
  for (double p : {1e-6, 2.3e-5, 1e-4}) {
    const PreparationRun run = prepare_for_fraction(0.346, p);
    EXPECT_LE(run.weld_error, 1e-12) << p;
    EXPECT_NEAR(run.weights.achieved_p, p, 1e-10 * p);
  }
  EXPECT_THROW(prepare_for_fraction(0.346, 0.1), DomainError);
  const nlohmann::json doc = cmd_prepare(0.346, 2.3e-5);
  for (const char* key : {"state", "target", "weights", "unitary"}) EXPECT_TRUE(doc.contains(key)) << key;
}

TEST(Commands, WitnessEvalOnPseudoStateMatchesPlain) {
  const StateParams a = StateParams::symmetric(0.346);
  const DensityOperator rho = acin_state(a);
  const double p = 2.3e-5;
  const nlohmann::json plain = cmd_witness_eval({a, 0.1069}, rho, std::nullopt);
  const nlohmann::json pseudo = cmd_witness_eval({a, 0.1069}, pseudo_state(rho, p).rho, p);
  EXPECT_NEAR(plain["expectation"].get<double>(), pseudo["expectation"].get<double>(), 1e-9);
  EXPECT_TRUE(plain["detected"].get<bool>());
}

TEST(Commands, TomographyFilesRoundTrip) {
  testing::Rng rng(17);
  const DensityOperator rho = testing::random_density(rng, 8);
  const auto dir = std::filesystem::temp_directory_path();
  const std::string state_path = (dir / "boundent_cli_state.json").string();
  const std::string data_path = (dir / "boundent_cli_data.json").string();
  write_json({{"state", to_json(rho.op())}}, state_path);
  write_json(cmd_tomo_simulate(read_state(state_path), 0.0, 7), data_path);
  const auto data = dataset_from_json(read_json_file(data_path));
  EXPECT_EQ(data.records.size(), 168u);
  const nlohmann::json est = cmd_tomo_reconstruct(data, true);
  const DensityOperator rho_hat(operator_from_document(est), kReconstructionTolerance);
  EXPECT_LE(trace_distance(rho_hat, rho), 1e-8);
  const nlohmann::json m = cmd_metrics(rho_hat, rho);
  EXPECT_NEAR(m["fidelity"].get<double>(), 1.0, 1e-8);
  std::remove(state_path.c_str());
  std::remove(data_path.c_str());
}

TEST(Commands, MissingFileIsDomainError) {
  EXPECT_THROW(read_json_file("/nonexistent/boundent.json"), DomainError);
}

}  // namespace
}  // namespace boundent::cli
