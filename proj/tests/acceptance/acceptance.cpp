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

// Acceptance criteria for the library and the report pipeline. Prints one
// PASS/FAIL line per criterion and exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "boundent/acin_states.hpp"
#include "boundent/metrics.hpp"
#include "boundent/nmr_prep.hpp"
#include "boundent/spectral.hpp"
#include "boundent/tomography.hpp"
#include "boundent/witness.hpp"
#include "boundent/witness_optimizer.hpp"
#include "boundent_cli/config.hpp"
#include "boundent_cli/report.hpp"
#include "generators.hpp"

namespace {

using namespace boundent;
using Clock = std::chrono::steady_clock;

constexpr double kA = 0.346;
constexpr double kEps = 0.1069;

struct Outcome {
  bool passed = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double time_limit_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("threw: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool in_time = time_limit_s <= 0.0 || secs < time_limit_s;
  const bool ok = o.passed && in_time;
  if (!ok) ++failures;
  std::ostringstream line;
  line << "AC" << id << " " << (ok ? "PASS" : "FAIL") << "  " << name << "  [" << o.detail << "; " << secs << " s";
  if (time_limit_s > 0.0) line << " of " << time_limit_s << " s";
  line << "]";
  std::cout << line.str() << std::endl;
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

bool within(double v, double lo, double hi) { return v >= lo && v <= hi; }

}  // namespace

int main() {
  const StateParams params = StateParams::symmetric(kA);
  const DensityOperator rho_be = acin_state(params);
  const Operator w = witness({params, kEps});

  criterion(1, "PPT on every cut", 1.0, [&] {
    const PptReport r = is_ppt(rho_be, 1e-10);
    double lmin = 1.0;
    for (const auto& c : r.cuts) lmin = std::min(lmin, c.min_eigenvalue);
    return Outcome{r.all_ppt() && lmin >= -1e-10, "min PT eigenvalue " + num(lmin)};
  });

  criterion(2, "witness identities", 1.0, [&] {
    testing::Rng rng(2026);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const StateParams a = testing::random_params(rng);
      worst = std::max(worst, std::abs(expectation(witness_bar(a), acin_state(a))));
    }
    const double v = expectation(w, rho_be);
    return Outcome{worst <= 1e-12 && std::abs(v + 0.1069) <= 1e-4,
                   "max |tr(Wbar rho)| " + num(worst) + ", tr(W rho) " + num(v)};
  });

  criterion(3, "witness spectrum", 1.0, [&] {
    const auto ev = eigvalsh(w);
    return Outcome{within(ev.front(), -1.040, -1.028) && within(ev.back(), 1.815, 1.825),
                   "lambda_min " + num(ev.front()) + ", lambda_max " + num(ev.back())};
  });

  criterion(4, "rank of the state", 0.0, [&] {
    const int r = numeric_rank(rho_be.op());
    return Outcome{r == 7, "rank " + std::to_string(r)};
  });

  criterion(5, "preparation weld", 1.0, [&] {
    const PreparationRun run = prepare_pseudo_state(params, 8.4e-5, InitialStateRecipe::matched(params));
    const double da = run.target.coefficient(ZTerm::kZ1);
    const double db = run.target.coefficient(ZTerm::kZ2);
    const double de = run.target.coefficient(ZTerm::kZ1Z2Z3);
    const bool ok = run.weld_error <= 1e-12 && run.weights.residual <= 1e-10 && std::abs(da + 0.78) <= 0.01 &&
                    std::abs(de - 3.85) <= 0.01 && std::abs(db + 0.21) <= 0.01;
    return Outcome{ok, "weld " + num(run.weld_error) + ", residual " + num(run.weights.residual) + ", d = (" +
                           num(da) + ", " + num(db) + ", " + num(de) + "), p " + num(run.p)};
  });

  criterion(6, "witness optimization", 300.0, [&] {
    WitnessOptimizerOptions o;
    o.range = {0.05, 1.0};
    o.restarts = 10000;
    o.seed = 0;
    const RobustnessReport r = optimize_parameters(o);
    const bool ok = within(r.a, 0.33, 0.36) && within(r.epsilon_certified, 0.10, 0.11) &&
                    std::abs(r.noise_threshold - 0.786) <= 0.005;
    return Outcome{ok, "a* " + num(r.a) + ", epsilon " + num(r.epsilon_certified) + ", q* " +
                           num(r.noise_threshold) + ", " + std::to_string(r.trace.size()) + " evaluations"};
  });

  criterion(7, "tomography round trip", 10.0, [&] {
    const auto settings = standard_settings();
    const DesignMatrix d = design_matrix(settings);
    testing::Rng rng(7);
    double worst = 0.0;
    std::size_t records = 0;
    for (int t = 0; t < 50; ++t) {
      const DensityOperator rho = testing::random_density(rng, 8);
      const TomographyDataset data = generate_dataset(rho, settings, 0.0, 0);
      records = data.records.size();
      worst = std::max(worst, trace_distance(reconstruct(data).rho_hat, rho));
    }
    return Outcome{d.rank == 63 && records == 168 && worst <= 1e-8,
                   "rank " + std::to_string(d.rank) + ", records " + std::to_string(records) +
                       ", worst trace distance " + num(worst)};
  });

  criterion(8, "error propagation", 120.0, [&] {
    const auto settings = standard_settings();
    const double sigma = 1e-3;
    constexpr int kTrials = 1000;
    double sum = 0.0, sum2 = 0.0, propagated = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const ReconstructionResult r = reconstruct(generate_dataset(rho_be, settings, sigma, 1000 + t));
      const double v = expectation(w, r.rho_hat);
      sum += v;
      sum2 += v * v;
      if (t == 0) propagated = propagate_witness_error(r, w);
    }
    const double mean = sum / kTrials;
    const double mc = std::sqrt((sum2 - kTrials * mean * mean) / (kTrials - 1));
    const double rel = std::abs(propagated - mc) / mc;
    return Outcome{rel <= 0.2, "propagated " + num(propagated) + ", Monte Carlo " + num(mc) + ", rel " + num(rel)};
  });

  criterion(9, "end-to-end calibrated run", 120.0, [&] {
    const cli::NoiseCalibration cal = cli::calibrate_to_reference(kA, kEps);
    cli::RunConfig c;
    c.depolarizing = cal.depolarizing;
    c.sigma = cal.sigma;
    auto check = [](const cli::ReportOutcome& r, double& f, double& d, double& wv, double& we) {
      if (r.document.contains("error")) return false;
      f = r.document["fidelity"]["value"].get<double>();
      d = r.document["trace_distance"]["value"].get<double>();
      wv = r.document["witness"]["value"].get<double>();
      we = r.document["witness"]["error"].get<double>();
      return std::abs(f - 0.98) <= 0.01 && within(d, 0.05, 0.13) && wv < 0.0 &&
             r.document["ppt"]["all_ppt"].get<bool>() && within(we, 0.005, 0.02) && r.exit_code == 0;
    };
    double f = 0, d = 0, wv = 0, we = 0;
    const bool primary = check(cli::cmd_report(c), f, d, wv, we);
    // The same properties over fresh noise draws.
    constexpr int kSeeds = 50;
    int good = 0;
    for (int s = 0; s < kSeeds; ++s) {
      cli::RunConfig cs = c;
      cs.seed = 100 + static_cast<std::uint64_t>(s);
      double f2, d2, w2, e2;
      if (check(cli::cmd_report(cs), f2, d2, w2, e2)) ++good;
    }
    const bool ok = primary && good >= 0.9 * kSeeds;
    return Outcome{ok, "lambda " + num(c.depolarizing) + ", sigma " + num(c.sigma) + "; F " + num(f) + ", d_t " +
                           num(d) + ", <W> " + num(wv) + " +/- " + num(we) + "; " + std::to_string(good) + "/" +
                           std::to_string(kSeeds) + " seeds satisfy all properties"};
  });

  criterion(10, "fidelity and trace distance", 0.0, [&] {
    testing::Rng rng(10);
    double worst = 0.0, self = 0.0;
    for (int t = 0; t < 100; ++t) {
      const DensityOperator r = testing::random_density(rng, 8);
      const DensityOperator s = testing::random_density(rng, 8);
      const double f = uhlmann_fidelity(r, s);
      const double dt = trace_distance(r, s);
      worst = std::max({worst, (1.0 - f) - dt, dt - std::sqrt(std::max(0.0, 1.0 - f * f))});
      self = std::max(self, std::abs(uhlmann_fidelity(r, r) - 1.0));
    }
    double ortho = 0.0;
    for (int t = 0; t < 20; ++t) {
      const Operator u = testing::random_unitary(rng, 8);
      const StateVector v0 = u.matrix().col(0), v1 = u.matrix().col(1);
      ortho = std::max(ortho, std::abs(trace_distance(DensityOperator::pure(v0), DensityOperator::pure(v1)) - 1.0));
    }
    return Outcome{worst <= 1e-12 && self <= 1e-12 && ortho <= 1e-12,
                   "sandwich violation " + num(worst) + ", |F(rho,rho)-1| " + num(self) + ", |d_t(orth)-1| " +
                       num(ortho)};
  });

  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
