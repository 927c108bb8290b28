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

#include "boundent/product_minimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "boundent/errors.hpp"

namespace boundent {
namespace {

using Qubit = Eigen::Vector2cd;

Qubit bloch_qubit(double theta, double phi) {
  return {Complex(std::cos(theta / 2.0), 0.0), std::polar(std::sin(theta / 2.0), phi)};
}

StateVector kron3(const Qubit& q1, const Qubit& q2, const Qubit& q3) {
  StateVector v(8);
  for (int b1 = 0; b1 < 2; ++b1)
    for (int b2 = 0; b2 < 2; ++b2)
      for (int b3 = 0; b3 < 2; ++b3) v(4 * b1 + 2 * b2 + b3) = q1(b1) * q2(b2) * q3(b3);
  return v;
}

// Columns: the product state with qubit `k` (0-based) replaced by |0>, |1>.
Eigen::Matrix<Complex, 8, 2> embedding(const std::array<Qubit, 3>& qs, int k) {
  Eigen::Matrix<Complex, 8, 2> e;
  for (int t = 0; t < 2; ++t) {
    std::array<Qubit, 3> tmp = qs;
    tmp[static_cast<std::size_t>(k)] = Qubit::Zero();
    tmp[static_cast<std::size_t>(k)](t) = 1.0;
    e.col(t) = kron3(tmp[0], tmp[1], tmp[2]);
  }
  return e;
}

struct Candidate {
  double value;
  BlochAngles angles;
  int restart;
};

bool better(const Candidate& a, const Candidate& b) {
  return a.value < b.value || (a.value == b.value && a.restart < b.restart);
}

Candidate descend(const ComplexMatrix& w, BlochAngles angles, const ProductMinimizerOptions& opt,
                  int restart) {
  std::array<Qubit, 3> qs;
  for (int k = 0; k < 3; ++k) qs[static_cast<std::size_t>(k)] = bloch_qubit(angles[2 * k], angles[2 * k + 1]);

  auto energy = [&]() {
    const StateVector v = kron3(qs[0], qs[1], qs[2]);
    return (v.adjoint() * w * v)(0, 0).real();
  };

  double current = energy();
  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    const double before = current;
    for (int k = 0; k < 3; ++k) {
      const auto e = embedding(qs, k);
      const Eigen::Matrix2cd m = e.adjoint() * w * e;
      // m = c*1 + h.sigma; the minimum sits at Bloch vector -h/|h|.
      const double hx = m(0, 1).real();
      const double hy = -m(0, 1).imag();
      const double hz = 0.5 * (m(0, 0).real() - m(1, 1).real());
      const double hn = std::sqrt(hx * hx + hy * hy + hz * hz);
      if (hn == 0.0) continue;
      const double theta = std::acos(std::clamp(-hz / hn, -1.0, 1.0));
      const double phi = std::atan2(-hy, -hx);
      angles[2 * k] = theta;
      angles[2 * k + 1] = phi;
      qs[static_cast<std::size_t>(k)] = bloch_qubit(theta, phi);
    }
    current = energy();
    if (before - current < opt.tolerance) break;
  }
  return {current, angles, restart};
}

BlochAngles random_start(std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  BlochAngles a{};
  for (int k = 0; k < 3; ++k) {
    a[2 * k] = std::acos(1.0 - 2.0 * unit(rng));  // uniform on the sphere
    a[2 * k + 1] = 2.0 * std::numbers::pi * unit(rng);
  }
  return a;
}

}  // namespace

StateVector product_state(const BlochAngles& angles) {
  return kron3(bloch_qubit(angles[0], angles[1]), bloch_qubit(angles[2], angles[3]),
               bloch_qubit(angles[4], angles[5]));
}

double product_expectation(const Operator& w, const BlochAngles& angles) {
  if (w.dim() != 8) throw DimensionError("product expectation needs an 8x8 operator");
  const StateVector v = product_state(angles);
  return (v.adjoint() * w.matrix() * v)(0, 0).real();
}

ProductMinimum min_over_product_states(const Operator& w, const ProductMinimizerOptions& options) {
  if (options.restarts < 1) throw DomainError("product-state minimisation needs restarts >= 1");
  if (w.dim() != 8) throw DimensionError("product-state minimisation needs an 8x8 operator");
  if (!w.is_hermitian(1e-10)) throw InvariantError("product-state minimisation needs a Hermitian operator");

  const ComplexMatrix wm = 0.5 * (w.matrix() + w.matrix().adjoint());
  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(options.restarts));
  if (options.restarts < 64) threads = 1;

  std::vector<Candidate> best(threads, Candidate{std::numeric_limits<double>::infinity(), {}, -1});
  auto worker = [&](unsigned t) {
    for (int r = static_cast<int>(t); r < options.restarts; r += static_cast<int>(threads)) {
      const Candidate c = descend(wm, random_start(options.seed, r), options, r);
      if (better(c, best[t])) best[t] = c;
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }

  Candidate winner = best.front();
  for (const Candidate& c : best) {
    if (better(c, winner)) winner = c;
  }
  return {winner.value, winner.angles, winner.restart};
}

ProductMinimum min_over_product_states(const Operator& w, int restarts, std::uint64_t seed) {
  ProductMinimizerOptions options;
  options.restarts = restarts;
  options.seed = seed;
  return min_over_product_states(w, options);
}

}  // namespace boundent
