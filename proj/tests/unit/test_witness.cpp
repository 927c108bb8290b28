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

#include "boundent/acin_states.hpp"
#include "boundent/errors.hpp"
#include "boundent/product_minimizer.hpp"
#include "boundent/spectral.hpp"
#include "boundent/witness.hpp"
#include "generators.hpp"

namespace boundent {
namespace {

constexpr double kA = 0.346;
constexpr double kEps = 0.1069;

WitnessParams optimal_witness() { return {StateParams::symmetric(kA), kEps}; }

TEST(WitnessBar, TraceIsFour) {
  testing::Rng rng(61);
  for (int t = 0; t < 20; ++t) {
    EXPECT_NEAR(witness_bar(testing::random_params(rng)).trace().real(), 4.0, 1e-13);
  }
}

TEST(WitnessBar, OrthogonalToMatchedState) {
  testing::Rng rng(62);
  for (int t = 0; t < 100; ++t) {
    const StateParams sp = testing::random_params(rng);
    EXPECT_NEAR(expectation(witness_bar(sp), acin_state(sp)), 0.0, 1e-12);
  }
}

TEST(WitnessBar, FlipFlopEntry) {
  const Operator wb = witness_bar(StateParams::symmetric(kA));
  const double expected = -0.5 - 3 * kA / (1 + kA * kA);
  EXPECT_NEAR(wb(0, 7).real(), expected, 1e-15);
  EXPECT_NEAR(expected, -1.4271, 1e-4);
  EXPECT_NEAR(wb(0, 0).real(), 0.5, 1e-15);
}

TEST(WitnessBar, DiagonalWeights) {
  const StateParams sp{0.3, 1.7, 2.2};
  const Operator wb = witness_bar(sp);
  auto lo = [](double a) { return 1 / (1 + a * a); };
  auto hi = [](double a) { return a * a / (1 + a * a); };
  EXPECT_NEAR(wb(1, 1).real(), lo(sp.a1), 1e-15);
  EXPECT_NEAR(wb(6, 6).real(), hi(sp.a1), 1e-15);
  EXPECT_NEAR(wb(2, 2).real(), lo(sp.a2), 1e-15);
  EXPECT_NEAR(wb(5, 5).real(), hi(sp.a2), 1e-15);
  EXPECT_NEAR(wb(4, 4).real(), lo(sp.a3), 1e-15);
  EXPECT_NEAR(wb(3, 3).real(), hi(sp.a3), 1e-15);
}

TEST(Witness, ZeroEpsilonIsWitnessBar) {
  const StateParams sp = StateParams::symmetric(0.7);
  EXPECT_EQ(witness({sp, 0.0}).max_abs_diff(witness_bar(sp)), 0.0);
  EXPECT_THROW(witness({sp, -0.1}), DomainError);
}

TEST(Witness, ExpectationsAtOptimalParameters) {
  const Operator w = witness(optimal_witness());
  const DensityOperator be = acin_state(StateParams::symmetric(kA));
  EXPECT_NEAR(expectation(w, be), -kEps, 1e-12);
  EXPECT_NEAR(expectation(w, DensityOperator::maximally_mixed(8)), (4 - 8 * kEps) / 8, 1e-14);
  EXPECT_NEAR((4 - 8 * kEps) / 8, 0.3931, 1e-4);
  const double ghz_value = expectation(w, DensityOperator::pure(ghz(+1)));
  EXPECT_NEAR(ghz_value, -1.0340, 1e-4);
}

TEST(Witness, SpectrumEndpoints) {
  const auto ev = eigvalsh(witness(optimal_witness()));
  EXPECT_GE(ev.front(), -1.04);
  EXPECT_LE(ev.front(), -1.02);
  EXPECT_GE(ev.back(), 1.81);
  EXPECT_LE(ev.back(), 1.83);
}

TEST(Witness, ClosedFormMinimumForSymmetricTriples) {
  testing::Rng rng(63);
  std::uniform_real_distribution<double> ua(0.1, 3.0);
  std::uniform_real_distribution<double> ue(0.0, 0.3);
  for (int t = 0; t < 50; ++t) {
    const double a = ua(rng);
    const double eps = ue(rng);
    const double lmin = min_eigenvalue(witness({StateParams::symmetric(a), eps}));
    EXPECT_NEAR(lmin, -3 * a / (1 + a * a) - eps, 1e-10) << a;
  }
}

TEST(Witness, GhzIsTheNegativeEigenvector) {
  const Operator w = witness(optimal_witness());
  const double lmin = -3 * kA / (1 + kA * kA) - kEps;
  const StateVector g = ghz(+1);
  EXPECT_LT((w.matrix() * g - lmin * g).norm(), 1e-14);
}

TEST(Witness, NonNegativeOnProductMixtures) {
  // Mixtures of products average product expectations, so sampling products
  // and random convex weights over them covers the separable samples.
  const Operator wb = witness_bar(StateParams::symmetric(kA));
  testing::Rng rng(64);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 10000; ++t) {
    ComplexMatrix mix = ComplexMatrix::Zero(8, 8);
    double total = 0.0;
    for (int k = 0; k < 4; ++k) {
      BlochAngles ang{};
      for (int q = 0; q < 3; ++q) {
        ang[2 * q] = std::acos(1 - 2 * u(rng));
        ang[2 * q + 1] = 2 * M_PI * u(rng);
      }
      const StateVector v = product_state(ang);
      const double weight = u(rng);
      mix += weight * v * v.adjoint();
      total += weight;
    }
    const DensityOperator rho(Operator(mix / total));
    ASSERT_GE(expectation(wb, rho), 0.0) << "trial " << t;
  }
}

TEST(PseudoWitness, IdentityOnPseudoStates) {
  testing::Rng rng(65);
  std::uniform_real_distribution<double> ulog(-6.0, 0.0);
  for (int t = 0; t < 20; ++t) {
    const StateParams sp = testing::random_params(rng);
    const DensityOperator be = acin_state(sp);
    const Operator w = witness({sp, 0.05});
    const double p = std::pow(10.0, ulog(rng));
    const double lhs = expectation(pseudo_witness(w, p, 8), pseudo_state(be, p).rho);
    const double rhs = expectation(w, be);
    EXPECT_NEAR(lhs, rhs, 1e-9 * std::max(1.0, std::abs(rhs))) << p;
  }
}

TEST(PseudoWitness, UnitTraceWitnessUsesPlainShift) {
  const Operator w = (1.0 / 4.0) * witness_bar(StateParams::symmetric(kA));
  const double p = 1e-3;
  const Operator plain = (1.0 / p) * (w - ((1.0 - p) / 8) * Operator::identity(8));
  EXPECT_LT(pseudo_witness(w, p, 8).max_abs_diff(plain), 1e-12);
}

TEST(PseudoWitness, EdgesAndScaling) {
  const Operator w = witness(optimal_witness());
  EXPECT_LT(pseudo_witness(w, 1.0, 8).max_abs_diff(w), 1e-15);
  EXPECT_THROW(pseudo_witness(w, 0.0, 8), DomainError);
  const double p = 2.3e-5;
  const Operator wn = pseudo_witness(w, p, 8);
  // Off-diagonal entries are untouched by the identity shift and scale as 1/p.
  EXPECT_NEAR(wn(0, 7).real(), w(0, 7).real() / p, 1e-9);
  EXPECT_NEAR(1.0 / p, 4.3e4, 0.1e4);
}

TEST(Expectation, RejectsNonHermitianWitness) {
  EXPECT_THROW(expectation(Operator::basis_outer(8, 0, 1), DensityOperator::maximally_mixed(8)), InvariantError);
}

TEST(WhiteNoise, ClosedFormCases) {
  const Operator w = witness(optimal_witness());
  const DensityOperator be = acin_state(StateParams::symmetric(kA));
  const double q = white_noise_threshold(w, be);
  const double m = (4 - 8 * kEps) / 8;
  EXPECT_NEAR(q, m / (m + kEps), 1e-12);
  EXPECT_NEAR(q, 0.7862, 1e-4);
}

TEST(WhiteNoise, SymmetricCrossover) {
  // tr(W)/8 = 0.5 and tr(W rho) = -0.5, so q* = 1/2.
  const Operator w = Operator::diagonal({-0.5, 4.5, 0, 0, 0, 0, 0, 0});
  const DensityOperator rho = DensityOperator::pure(basis_state(8, 0));
  EXPECT_NEAR(expectation(w, rho), -0.5, 1e-15);
  EXPECT_NEAR(white_noise_threshold(w, rho), 0.5, 1e-15);
}

TEST(WhiteNoise, VanishingEpsilonNeedsNoNoise) {
  const StateParams sp = StateParams::symmetric(kA);
  const DensityOperator be = acin_state(sp);
  EXPECT_NEAR(white_noise_threshold(witness({sp, 1e-9}), be), 1.0, 1e-8);
  EXPECT_THROW(white_noise_threshold(witness({sp, 0.0}), be), DomainError);
}

}  // namespace
}  // namespace boundent
