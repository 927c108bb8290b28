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

#include "boundent/witness.hpp"

#include <cmath>
#include <sstream>

#include "boundent/errors.hpp"

namespace boundent {

void WitnessParams::validate() const {
  a.validate();
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("witness epsilon must be finite and non-negative");
  }
}

Operator witness_bar(const StateParams& params) {
  params.validate();
  const StateVector minus = ghz(-1);
  ComplexMatrix m = minus * minus.adjoint();

  // (basis state weighted 1/(1+a^2), complement weighted a^2/(1+a^2))
  const double as[3] = {params.a1, params.a2, params.a3};
  const int states[3] = {0b001, 0b010, 0b100};
  double flip_flop = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double a = as[i];
    const double den = 1.0 + a * a;
    m(states[i], states[i]) += 1.0 / den;
    m(7 - states[i], 7 - states[i]) += a * a / den;
    flip_flop += a / den;
  }
  m(0, 7) -= flip_flop;
  m(7, 0) -= flip_flop;
  return Operator(std::move(m));
}

Operator witness(const WitnessParams& params) {
  params.validate();
  Operator w = witness_bar(params.a);
  w -= params.epsilon * Operator::identity(8);
  return w;
}

Operator pseudo_witness(const Operator& w, double p, int d) {
  if (!(p > 0.0)) throw DomainError("pseudo witness needs p > 0");
  if (d != w.dim()) throw DimensionError("pseudo witness dimension does not match the witness");
  // The identity part carries tr(w); without it the shift only works for tr(w) = 1.
  const double shift = (1.0 - p) * w.trace().real() / d;
  return (1.0 / p) * (w - shift * Operator::identity(d));
}

double expectation(const Operator& w, const DensityOperator& rho) {
  if (!w.is_hermitian(1e-10)) throw InvariantError("witness is not Hermitian");
  return trace_product(w, rho.op()).real();
}

double white_noise_threshold(const Operator& w, const DensityOperator& rho_be) {
  const double mixed = w.trace().real() / w.dim();
  const double detected = expectation(w, rho_be);
  if (!(detected < 0.0)) {
    std::ostringstream os;
    os << "witness does not detect the state (tr(W rho) = " << detected << ")";
    throw DomainError(os.str());
  }
  if (!(mixed > 0.0)) throw DomainError("witness is negative on the maximally mixed state");
  return mixed / (mixed - detected);
}

}  // namespace boundent
