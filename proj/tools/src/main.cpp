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

#include <iostream>
#include <optional>
#include <string>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include "boundent/errors.hpp"
#include "boundent_cli/commands.hpp"
#include "boundent_cli/config.hpp"
#include "boundent_cli/io.hpp"
#include "boundent_cli/report.hpp"
#include "boundent_cli/verify.hpp"

namespace {

using boundent::cli::ParamBlob;
using boundent::cli::RunConfig;

boundent::SearchRange parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw boundent::DomainError("range must look like lo:hi");
  try {
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw boundent::DomainError("range must look like lo:hi, got " + text);
  }
}

void add_run_flags(CLI::App* app, RunConfig& c) {
  app->add_option("--a", c.a, "symmetric state parameter")->capture_default_str();
  app->add_option("--eps", c.epsilon, "witness offset epsilon")->capture_default_str();
  app->add_option("--p", c.p, "pseudo-pure fraction")->capture_default_str();
  app->add_option("--seed", c.seed, "noise seed")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = boundent::cli;
  CLI::App app{"Pseudo bound-entanglement toolkit"};
  app.require_subcommand(1);

  int exit_code = cli::kExitOk;

  // state
  auto* state = app.add_subcommand("state", "Build the state for a parameter triple");
  double state_a = 0.3460;
  std::optional<double> a1, a2, a3, state_p;
  std::string params_path, state_out;
  state->add_option("--a", state_a, "symmetric parameter")->capture_default_str();
  state->add_option("--a1", a1);
  state->add_option("--a2", a2);
  state->add_option("--a3", a3);
  state->add_option("--p", state_p, "emit the pseudo state with this fraction");
  state->add_option("--params", params_path, "parameter blob JSON {a1,a2,a3,p}");
  state->add_option("--out", state_out, "output file (default stdout)");

  // ppt
  auto* ppt = app.add_subcommand("ppt", "Partial-transpose test on every single-qubit cut");
  std::string ppt_state;
  double ppt_tol = 1e-10;
  ppt->add_option("--state", ppt_state, "state JSON")->required();
  ppt->add_option("--tol", ppt_tol, "eigenvalue tolerance")->capture_default_str();

  // witness
  auto* wit = app.add_subcommand("witness", "Evaluate or optimize the witness");
  wit->require_subcommand(1);
  auto* eval = wit->add_subcommand("eval", "tr(W rho) for a state file");
  double eval_a = 0.3460, eval_eps = 0.1069;
  std::optional<double> eval_p;
  std::string eval_state, eval_out;
  eval->add_option("--a", eval_a)->capture_default_str();
  eval->add_option("--eps", eval_eps)->capture_default_str();
  eval->add_option("--state", eval_state, "state JSON")->required();
  eval->add_option("--p", eval_p, "treat the state as a pseudo state with this fraction");
  eval->add_option("--out", eval_out);

  auto* opt = wit->add_subcommand("optimize", "Minimise the white-noise threshold over symmetric a");
  boundent::WitnessOptimizerOptions opt_options;
  std::string opt_range = "0.05:1.0", opt_out;
  opt->add_option("--range", opt_range, "search interval lo:hi")->capture_default_str();
  opt->add_option("--restarts", opt_options.restarts, "product-state restarts")->capture_default_str();
  opt->add_option("--seed", opt_options.seed)->capture_default_str();
  opt->add_option("--grid", opt_options.grid_points, "bracketing grid points")->capture_default_str();
  opt->add_option("--threads", opt_options.threads, "0 = hardware concurrency")->capture_default_str();
  opt->add_option("--out", opt_out);

  // prepare
  auto* prep = app.add_subcommand("prepare", "Simulate the NMR preparation of the pseudo state");
  double prep_a = 0.3460, prep_p = 8.4e-5 / 3.61;
  std::string prep_out;
  prep->add_option("--a", prep_a)->capture_default_str();
  prep->add_option("--p", prep_p)->capture_default_str();
  prep->add_option("--out", prep_out);

  // tomo
  auto* tomo = app.add_subcommand("tomo", "Simulated readout and reconstruction");
  tomo->require_subcommand(1);
  auto* sim = tomo->add_subcommand("simulate", "Noisy records for the standard readout set");
  std::string sim_state, sim_out;
  double sim_sigma = 0.0;
  std::uint64_t sim_seed = 1;
  sim->add_option("--state", sim_state, "state JSON")->required();
  sim->add_option("--sigma", sim_sigma, "noise per record, in the state's units")->capture_default_str();
  sim->add_option("--seed", sim_seed)->capture_default_str();
  sim->add_option("--out", sim_out);

  auto* rec = tomo->add_subcommand("reconstruct", "Least-squares state estimate");
  std::string rec_data, rec_out;
  bool rec_project = false;
  rec->add_option("--data", rec_data, "dataset JSON")->required();
  rec->add_option("--out", rec_out);
  rec->add_flag("--project", rec_project, "project onto physical states");

  // metrics
  auto* met = app.add_subcommand("metrics", "Fidelity and trace distance between two states");
  std::string met_rho, met_ref, met_out;
  met->add_option("--rho", met_rho, "state JSON")->required();
  met->add_option("--ref", met_ref, "reference state JSON")->required();
  met->add_option("--out", met_out);

  // report
  auto* rep = app.add_subcommand("report", "End-to-end pipeline on synthetic data");
  RunConfig rep_config;
  bool rep_calibrated = false, rep_json = false;
  add_run_flags(rep, rep_config);
  rep->add_option("--sigma", rep_config.sigma, "record noise in deviation units")->capture_default_str();
  rep->add_option("--lambda", rep_config.depolarizing, "depolarizing strength")->capture_default_str();
  rep->add_flag("--project", rep_config.project, "project the peeled estimate");
  rep->add_flag("--calibrated", rep_calibrated, "use noise matched to the reference experiment");
  rep->add_option("--out", rep_config.json_out, "write the JSON report here");
  rep->add_flag("--json", rep_json, "print the JSON report instead of the summary");

  // verify
  auto* ver = app.add_subcommand("verify", "Run the invariant suite");
  cli::VerifyOptions ver_options;
  bool ver_fault = false;
  add_run_flags(ver, ver_options.config);
  ver->add_option("--restarts", ver_options.restarts, "product-state restarts")->capture_default_str();
  ver->add_flag("--inject-fault", ver_fault, "flip one sign of the preparation gate");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*state) {
      ParamBlob blob;
      if (!params_path.empty()) {
        blob = cli::param_blob_from_json(cli::read_json_file(params_path));
      } else {
        blob.a = {a1.value_or(state_a), a2.value_or(state_a), a3.value_or(state_a)};
      }
      if (state_p) blob.p = state_p;
      cli::write_json(cli::cmd_state(blob), state_out);
    } else if (*ppt) {
      const auto doc = cli::cmd_ppt(cli::read_state(ppt_state, ppt_tol));
      cli::write_json(doc, "");
      if (!doc["all_ppt"].get<bool>()) exit_code = cli::kExitInvariant;
    } else if (*eval) {
      const boundent::WitnessParams params{boundent::StateParams::symmetric(eval_a), eval_eps};
      const auto doc = cli::cmd_witness_eval(params, cli::read_state(eval_state), eval_p);
      cli::write_json(doc, eval_out);
      if (!doc["detected"].get<bool>()) exit_code = cli::kExitNotDetected;
    } else if (*opt) {
      opt_options.range = parse_range(opt_range);
      cli::write_json(cli::cmd_witness_optimize(opt_options), opt_out);
    } else if (*prep) {
      cli::write_json(cli::cmd_prepare(prep_a, prep_p), prep_out);
    } else if (*sim) {
      cli::write_json(cli::cmd_tomo_simulate(cli::read_state(sim_state), sim_sigma, sim_seed), sim_out);
    } else if (*rec) {
      const auto data = boundent::dataset_from_json(cli::read_json_file(rec_data));
      cli::write_json(cli::cmd_tomo_reconstruct(data, rec_project), rec_out);
    } else if (*met) {
      cli::write_json(cli::cmd_metrics(cli::read_state(met_rho), cli::read_state(met_ref)), met_out);
    } else if (*rep) {
      if (rep_calibrated) {
        const auto cal = cli::calibrate_to_reference(rep_config.a, rep_config.epsilon);
        rep_config.depolarizing = cal.depolarizing;
        rep_config.sigma = cal.sigma;
      }
      const auto outcome = cli::cmd_report(rep_config);
      if (!rep_config.json_out.empty()) cli::write_json(outcome.document, rep_config.json_out);
      if (rep_json) {
        cli::write_json(outcome.document, "");
      } else {
        std::cout << outcome.summary;
      }
      exit_code = outcome.exit_code;
    } else if (*ver) {
      if (ver_fault) ver_options.unitary_override = cli::faulty_preparation_unitary();
      const auto checks = cli::cmd_verify(ver_options);
      std::cout << cli::format_table(checks);
      exit_code = cli::verify_exit_code(checks);
    }
  } catch (const boundent::Error& e) {
    std::cerr << "boundent: " << e.what() << '\n';
    return cli::kExitInvariant;
  }
  return exit_code;
}
