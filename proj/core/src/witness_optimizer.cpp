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

#include "boundent/witness_optimizer.hpp"

#include <algorithm>
#include <cmath>

#include "boundent/errors.hpp"

namespace boundent {

OptimizerTraceEntry evaluate_symmetric(double a, const ProductMinimizerOptions& options) {
  const StateParams params = StateParams::symmetric(a);
  const double epsilon = min_over_product_states(witness_bar(params), options).value;
  OptimizerTraceEntry entry{a, epsilon, 1.0};
  if (epsilon > 0.0) {
    try {
      entry.noise_threshold = white_noise_threshold(witness({params, epsilon}), acin_state(params));
    } catch (const DomainError&) {
      entry.noise_threshold = 1.0;
    }
  }
  return entry;
}

RobustnessReport optimize_parameters(const WitnessOptimizerOptions& options) {
  const auto [lo, hi] = options.range;
  if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi)) {
    throw DomainError("witness optimisation needs a non-empty range inside (0, inf)");
  }
  if (options.grid_points < 3) throw DomainError("witness optimisation needs >= 3 grid points");

  ProductMinimizerOptions inner;
  inner.restarts = options.restarts;
  inner.seed = options.seed;
  inner.threads = options.threads;

  RobustnessReport report;
  auto eval = [&](double a) {
    report.trace.push_back(evaluate_symmetric(a, inner));
    return report.trace.back().noise_threshold;
  };

  const int n = options.grid_points;
  std::vector<double> grid(static_cast<std::size_t>(n));
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    values[static_cast<std::size_t>(i)] = eval(grid[static_cast<std::size_t>(i)]);
  }
  const auto best_it = std::min_element(values.begin(), values.end());
  const auto ib = static_cast<std::size_t>(best_it - values.begin());
  double left = grid[ib == 0 ? 0 : ib - 1];
  double right = grid[std::min(ib + 1, grid.size() - 1)];

  // Golden-section refinement inside the bracketing grid cell pair.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = right - inv_phi * (right - left);
  double x2 = left + inv_phi * (right - left);
  double f1 = eval(x1);
  double f2 = eval(x2);
  while (right - left > options.a_tolerance) {
    if (f1 <= f2) {
      right = x2;
      x2 = x1;
      f2 = f1;
      x1 = right - inv_phi * (right - left);
      f1 = eval(x1);
    } else {
      left = x1;
      x1 = x2;
      f1 = f2;
      x2 = left + inv_phi * (right - left);
      f2 = eval(x2);
    }
  }

  double best_q = report.trace.front().noise_threshold;
  for (const auto& e : report.trace) best_q = std::min(best_q, e.noise_threshold);
  const OptimizerTraceEntry* winner = nullptr;
  for (const auto& e : report.trace) {
    if (e.noise_threshold <= best_q + 1e-9 && (winner == nullptr || e.a < winner->a)) winner = &e;
  }
  report.a = winner->a;
  report.epsilon_certified = winner->epsilon;
  report.noise_threshold = winner->noise_threshold;
  return report;
}

}  // namespace boundent
