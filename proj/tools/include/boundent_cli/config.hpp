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

#pragma once

#include <cstdint>
#include <string>

namespace boundent::cli {

/// Settings shared by the pipeline subcommands.
struct RunConfig {
  double a = 0.3460;
  double epsilon = 0.1069;
  /// Pseudo-pure fraction; the five NMR inputs are scaled to reach it.
  double p = 8.4e-5 / 3.61;
  /// Readout noise per record, in units of the deviation (raw sigma / p).
  double sigma = 0.0;
  /// Depolarizing strength applied to the prepared state before readout.
  double depolarizing = 0.0;
  std::uint64_t seed = 1;
  /// Project the peeled estimate onto physical states before analysis.
  bool project = false;
  std::string json_out;

  /// Throws DomainError for out-of-range fields. p is checked by the report.
  void validate() const;
};

/// <W> must fall below -kDetectionTolerance to count as a detection.
inline constexpr double kDetectionTolerance = 1e-10;

/// Values quoted for the reference experiment.
inline constexpr double kReferenceWitness = -0.029;
inline constexpr double kReferenceWitnessError = 0.010;
inline constexpr double kReferenceFidelity = 0.98;
inline constexpr double kReferenceTraceDistance = 0.09;

struct NoiseCalibration {
  double depolarizing = 0.0;
  double sigma = 0.0;  ///< deviation units
};

/// Noise that moves the exact run onto the reference witness value and
/// error bar: lambda from <W>(lambda) = -eps + lambda (eps + tr W / 8), and
/// sigma from the propagated error of a unit-noise reconstruction.
NoiseCalibration calibrate_to_reference(double a, double epsilon);

}  // namespace boundent::cli
