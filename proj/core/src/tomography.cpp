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

#include "boundent/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "boundent/errors.hpp"
#include "boundent/spectral.hpp"

namespace boundent {
namespace {

constexpr double kRankTolerance = 1e-10;

int numeric_rank(const Eigen::MatrixXd& a) {
  if (a.rows() == 0) return 0;
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const Eigen::VectorXd& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  return static_cast<int>((s.array() > kRankTolerance * s(0)).count());
}

Eigen::RowVectorXd design_row(const Operator& observable) {
  const auto& basis = pauli_basis();
  Eigen::RowVectorXd row(kNumParameters);
  for (int k = 0; k < kNumParameters; ++k) {
    row(k) = trace_product(observable, basis[static_cast<std::size_t>(k)]).real() / 8.0;
  }
  return row;
}

Operator heisenberg_observable(const ReadoutSetting& s, int line, Quadrature q) {
  const Operator r = readout_unitary(s);
  return r.adjoint() * line_observable(line, q) * r;
}

}  // namespace

const std::vector<Operator>& pauli_basis() {
  static const std::vector<Operator> basis = [] {
    const Operator single[4] = {pauli::identity(), pauli::x(), pauli::y(), pauli::z()};
    std::vector<Operator> out;
    out.reserve(kNumParameters);
    for (int k = 1; k < 64; ++k) {
      out.push_back(tensor({single[(k >> 4) & 3], single[(k >> 2) & 3], single[k & 3]}));
    }
    return out;
  }();
  return basis;
}

Eigen::VectorXd to_parameters(const Operator& op) {
  if (op.dim() != 8) throw DimensionError("Pauli parameters are defined for three qubits");
  const auto& basis = pauli_basis();
  Eigen::VectorXd theta(kNumParameters);
  for (int k = 0; k < kNumParameters; ++k) theta(k) = trace_product(op, basis[static_cast<std::size_t>(k)]).real();
  return theta;
}

Operator from_parameters(const Eigen::VectorXd& theta) {
  if (theta.size() != kNumParameters) throw DimensionError("expected 63 Pauli parameters");
  const auto& basis = pauli_basis();
  ComplexMatrix m = ComplexMatrix::Identity(8, 8);
  for (int k = 0; k < kNumParameters; ++k) m += theta(k) * basis[static_cast<std::size_t>(k)].matrix();
  return Operator(m / 8.0);
}

DesignMatrix design_matrix(std::span<const ReadoutSetting> settings) {
  if (settings.empty()) throw DomainError("design matrix needs at least one setting");
  DesignMatrix dm;
  dm.a.resize(static_cast<Eigen::Index>(settings.size()) * kValuesPerSetting, kNumParameters);
  Eigen::Index row = 0;
  for (const ReadoutSetting& s : settings) {
    for (int j = 0; j < 4; ++j) {
      for (Quadrature q : {Quadrature::kX, Quadrature::kY}) dm.a.row(row++) = design_row(heisenberg_observable(s, j, q));
    }
  }
  dm.rank = numeric_rank(dm.a);
  dm.deficiency = kNumParameters - dm.rank;
  return dm;
}

DesignMatrix design_matrix(const TomographyDataset& dataset) {
  if (dataset.records.empty()) throw DomainError("design matrix needs at least one record");
  DesignMatrix dm;
  dm.a.resize(static_cast<Eigen::Index>(dataset.records.size()), kNumParameters);
  for (std::size_t r = 0; r < dataset.records.size(); ++r) {
    const auto& rec = dataset.records[r];
    dm.a.row(static_cast<Eigen::Index>(r)) = design_row(heisenberg_observable(rec.setting, rec.line, rec.quad));
  }
  dm.rank = numeric_rank(dm.a);
  dm.deficiency = kNumParameters - dm.rank;
  return dm;
}

TomographyDataset generate_dataset(const DensityOperator& rho, std::span<const ReadoutSetting> settings,
                                   double sigma, std::uint64_t seed, const std::optional<Operator>& pre_rotation) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw DomainError("noise sigma must be finite and >= 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma > 0.0 ? sigma : 1.0);
  TomographyDataset ds;
  ds.records.reserve(settings.size() * kValuesPerSetting);
  for (const ReadoutSetting& s : settings) {
    Operator r = readout_unitary(s);
    if (pre_rotation) r = r * *pre_rotation;
    const auto values = measure_with_unitary(rho, r);
    for (int j = 0; j < 4; ++j) {
      for (int qi = 0; qi < 2; ++qi) {
        double v = values[static_cast<std::size_t>(2 * j + qi)];
        if (sigma > 0.0) v += noise(rng);
        ds.records.push_back({s, j, qi == 0 ? Quadrature::kX : Quadrature::kY, v, sigma});
      }
    }
  }
  return ds;
}

ReconstructionResult reconstruct(const TomographyDataset& dataset) {
  const DesignMatrix dm = design_matrix(dataset);
  if (dm.deficiency > 0) {
    throw RankDeficientError("tomography records leave " + std::to_string(dm.deficiency) +
                                 " parameter directions undetermined",
                             dm.deficiency);
  }
  const auto n = static_cast<Eigen::Index>(dataset.records.size());
  Eigen::VectorXd values(n);
  Eigen::VectorXd sigmas(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    values(r) = dataset.records[static_cast<std::size_t>(r)].value;
    sigmas(r) = dataset.records[static_cast<std::size_t>(r)].sigma;
  }
  if ((sigmas.array() < 0.0).any() || !sigmas.allFinite()) throw DomainError("record sigmas must be finite and >= 0");
  const bool common = (sigmas.array() == sigmas(0)).all();
  if (!common && (sigmas.array() == 0.0).any()) {
    throw DomainError("cannot weight records when only some sigmas are zero");
  }

  // Whitened system; a common sigma leaves the estimate unweighted.
  Eigen::VectorXd w = Eigen::VectorXd::Ones(n);
  if (!common) w = sigmas.cwiseInverse();
  const Eigen::MatrixXd aw = w.asDiagonal() * dm.a;
  const Eigen::VectorXd bw = w.asDiagonal() * values;
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(aw);
  const Eigen::VectorXd theta = qr.solve(bw);

  const Eigen::MatrixXd normal = aw.transpose() * aw;
  Eigen::MatrixXd cov = normal.ldlt().solve(Eigen::MatrixXd::Identity(kNumParameters, kNumParameters));
  if (common) cov *= sigmas(0) * sigmas(0);
  cov = (0.5 * (cov + cov.transpose())).eval();

  DensityOperator rho_hat(from_parameters(theta), kReconstructionTolerance, PsdCheck::kReport);
  return {std::move(rho_hat), theta, cov, (dm.a * theta - values).norm()};
}

DensityOperator project_to_physical(const Operator& rho_hat) {
  const EigenDecomposition ed = eigh(rho_hat, kReconstructionTolerance);
  const Eigen::Index d = ed.values.size();
  // Euclidean projection of the spectrum onto the probability simplex.
  std::vector<double> u(ed.values.data(), ed.values.data() + d);
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0;
  double shift = 0.0;
  for (Eigen::Index k = 0; k < d; ++k) {
    cumulative += u[static_cast<std::size_t>(k)];
    const double t = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (u[static_cast<std::size_t>(k)] - t > 0.0) shift = t;
  }
  Eigen::VectorXd projected = (ed.values.array() - shift).cwiseMax(0.0);
  ComplexMatrix m = ed.vectors * projected.asDiagonal() * ed.vectors.adjoint();
  m = 0.5 * (m + m.adjoint());
  return DensityOperator(Operator(std::move(m)), kReconstructionTolerance);
}

Eigen::VectorXd witness_parameters(const Operator& w) { return to_parameters(w) / 8.0; }

double propagate_witness_error(const ReconstructionResult& result, const Operator& w) {
  if (w.dim() != 8) throw DimensionError("witness must be 8x8 to propagate tomography errors");
  if (result.covariance.rows() != kNumParameters || result.covariance.cols() != kNumParameters) {
    throw DimensionError("reconstruction covariance must be 63x63");
  }
  const Eigen::VectorXd coeffs = witness_parameters(w);
  const double var = coeffs.dot(result.covariance * coeffs);
  return std::sqrt(std::max(var, 0.0));
}

}  // namespace boundent
