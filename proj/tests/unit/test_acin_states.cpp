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
#include "boundent/spectral.hpp"
#include "generators.hpp"

namespace boundent {
namespace {

// Permutation matrix relabelling basis states when qubits qa and qb swap.
Operator qubit_swap(int qa, int qb) {
  ComplexMatrix m = ComplexMatrix::Zero(8, 8);
  const int sa = 3 - qa;
  const int sb = 3 - qb;
  for (int k = 0; k < 8; ++k) {
    const int ba = (k >> sa) & 1;
    const int bb = (k >> sb) & 1;
    int img = k & ~((1 << sa) | (1 << sb));
    img |= (ba << sb) | (bb << sa);
    m(img, k) = 1.0;
  }
  return Operator(m);
}

TEST(Ghz, NormAndOrthogonality) {
  EXPECT_NEAR(ghz(+1).norm(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(ghz(+1).dot(ghz(-1))), 0.0, 1e-15);
  EXPECT_THROW(ghz(0), DomainError);
}

TEST(StateParams, ValidationAndFlag) {
  EXPECT_THROW(StateParams({0.0, 1.0, 1.0}).validate(), DomainError);
  EXPECT_THROW(StateParams({1.0, -2.0, 1.0}).validate(), DomainError);
  EXPECT_THROW(acin_state({1.0, 1.0, std::nan("")}), DomainError);
  EXPECT_TRUE(StateParams::symmetric(0.346).entangled_regime());
  EXPECT_FALSE(StateParams::symmetric(1.0).entangled_regime());
  EXPECT_FALSE(StateParams({2.0, 0.5, 1.0}).entangled_regime());
  EXPECT_NO_THROW(acin_state(StateParams::symmetric(1.0)));
}

TEST(AcinState, PopulationsAtOptimum) {
  const double a = 0.346;
  const double n = 2.0 + 3.0 * (a + 1.0 / a);
  EXPECT_NEAR(n, 11.7085, 1e-4);
  const DensityOperator rho = acin_state(StateParams::symmetric(a));
  const double expected[8] = {0.0854, 0.0296, 0.0296, 0.2469, 0.0296, 0.2469, 0.2469, 0.0854};
  for (int k = 0; k < 8; ++k) EXPECT_NEAR(rho.op()(k, k).real(), expected[k], 1e-4) << k;
  EXPECT_NEAR(rho.op()(0, 7).real(), 1.0 / n, 1e-15);
}

TEST(AcinState, RankSevenAtOptimum) {
  EXPECT_EQ(numeric_rank(acin_state(StateParams::symmetric(0.346)).op()), 7);
}

TEST(AcinState, StructureOverRandomParams) {
  testing::Rng rng(51);
  for (int t = 0; t < 100; ++t) {
    const StateParams sp = testing::random_params(rng);
    const DensityOperator rho = acin_state(sp);
    const double n = 2.0 + sp.a1 + 1 / sp.a1 + sp.a2 + 1 / sp.a2 + sp.a3 + 1 / sp.a3;
    const double diag[8] = {1, sp.a1, sp.a2, 1 / sp.a3, sp.a3, 1 / sp.a2, 1 / sp.a1, 1};
    EXPECT_NEAR(std::abs(rho.op().trace() - 1.0), 0.0, 1e-15);
    EXPECT_EQ(rho.op().hermiticity_error(), 0.0);
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        const Complex v = rho.op()(i, j);
        if (i == j) {
          EXPECT_NEAR(v.real(), diag[i] / n, 1e-15);
        } else if ((i == 0 && j == 7) || (i == 7 && j == 0)) {
          EXPECT_NEAR(v.real(), 1.0 / n, 1e-15);
        } else {
          EXPECT_EQ(v, Complex(0.0, 0.0));
        }
      }
    }
  }
}

TEST(AcinState, PptForRandomParams) {
  testing::Rng rng(52);
  for (int t = 0; t < 50; ++t) {
    const StateParams sp = testing::random_params(rng);
    EXPECT_TRUE(is_ppt(acin_state(sp)).all_ppt()) << sp.a1 << " " << sp.a2 << " " << sp.a3;
  }
}

TEST(AcinState, ParameterPermutationIsQubitPermutation) {
  // a1 lives on qubit 3, a2 on qubit 2, a3 on qubit 1.
  testing::Rng rng(53);
  for (int t = 0; t < 20; ++t) {
    const StateParams sp = testing::random_params(rng);
    const DensityOperator rho = acin_state(sp);
    EXPECT_LT(acin_state({sp.a3, sp.a2, sp.a1}).op().max_abs_diff(conjugate(qubit_swap(1, 3), rho.op())), 1e-15);
    EXPECT_LT(acin_state({sp.a2, sp.a1, sp.a3}).op().max_abs_diff(conjugate(qubit_swap(2, 3), rho.op())), 1e-15);
    EXPECT_LT(acin_state({sp.a1, sp.a3, sp.a2}).op().max_abs_diff(conjugate(qubit_swap(1, 2), rho.op())), 1e-15);
  }
}

TEST(PseudoState, Endpoints) {
  const DensityOperator be = acin_state(StateParams::symmetric(0.346));
  EXPECT_LT(pseudo_state(be, 0.0).rho.op().max_abs_diff(Operator::identity(8) * Complex(0.125)), 1e-16);
  EXPECT_LT(pseudo_state(be, 1.0).rho.op().max_abs_diff(be.op()), 1e-16);
  EXPECT_THROW(pseudo_state(be, -0.1), DomainError);
  EXPECT_THROW(pseudo_state(be, 1.1), DomainError);
  EXPECT_THROW(pseudo_state(be, 0.5, 4), DimensionError);
}

TEST(PseudoState, SpectrumAtNmrScale) {
  const double p = 8.4e-5 / 3.61;
  EXPECT_NEAR(p, 2.33e-5, 1e-7);
  const PseudoState ps = pseudo_state(acin_state(StateParams::symmetric(0.346)), p);
  const double lo = (1 - p) / 8;
  for (double v : eigvalsh(ps.rho.op())) {
    EXPECT_GE(v, lo - 1e-15);
    EXPECT_LE(v, lo + p + 1e-15);
  }
}

TEST(PeelIdentity, RoundTrip) {
  testing::Rng rng(54);
  std::uniform_real_distribution<double> up(0.01, 1.0);
  for (int t = 0; t < 50; ++t) {
    const DensityOperator be = acin_state(testing::random_params(rng));
    const double p = up(rng);
    EXPECT_LT(peel_identity(pseudo_state(be, p)).op().max_abs_diff(be.op()), 1e-12) << p;
  }
}

TEST(PeelIdentity, RoundTripAtNmrScaleIsLimitedByRounding) {
  // Entries of the mixture carry ~eps/8 absolute rounding; peeling divides by p.
  const DensityOperator be = acin_state(StateParams::symmetric(0.346));
  for (double p : {1e-3, 8.4e-5 / 3.61, 1e-5}) {
    const double err = peel_identity(pseudo_state(be, p)).op().max_abs_diff(be.op());
    EXPECT_LT(err, 1e-16 / p) << p;
  }
}

TEST(PeelIdentity, MaximallyMixedAndGuards) {
  const DensityOperator mm = DensityOperator::maximally_mixed(8);
  EXPECT_LT(peel_identity(mm, 0.3).op().max_abs_diff(mm.op()), 1e-15);
  EXPECT_THROW(peel_identity(mm, 0.0), DomainError);
  const PseudoState ps = pseudo_state(acin_state(StateParams::symmetric(0.5)), 0.0);
  EXPECT_THROW(peel_identity(ps), DomainError);
}

TEST(PeelIdentity, ReportsNegativityInsteadOfThrowing) {
  // A pseudo state whose deviation is slightly non-physical after peeling.
  const double p = 1e-3;
  Operator dev = Operator::basis_outer(8, 0, 0) - Operator::basis_outer(8, 1, 1);
  Operator rho = Operator::identity(8) * Complex(0.125) + dev * Complex(0.2 * p);
  const DensityOperator peeled = peel_identity(DensityOperator(rho), p);
  EXPECT_FALSE(peeled.is_psd());
}

}  // namespace
}  // namespace boundent
