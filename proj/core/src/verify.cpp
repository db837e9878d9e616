// Copyright 2026 The sicfid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sicfid/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace sicfid {

namespace {

constexpr double kNormTolerance = 1e-8;
constexpr double kDominantFloor = 1.0 - 1e-4;
constexpr double kPhaseAnchorFloor = 1e-10;

PrimeDim dim_of(const ComplexOperator& rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("operator must be square");
  return PrimeDim(static_cast<int>(rho.rows()));
}

}  // namespace

StateVector::StateVector(PrimeDim dim, Eigen::VectorXcd amplitudes)
    : dim_(dim), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != dim_.value()) {
    throw std::invalid_argument("state vector has " + std::to_string(amplitudes_.size()) +
                                " amplitudes, expected " + std::to_string(dim_.value()));
  }
  const double norm = amplitudes_.norm();
  if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
    throw std::invalid_argument("state vector is not normalized (norm " + std::to_string(norm) +
                                ")");
  }
}

SicReport sic_overlaps(const StateVector& phi, double threshold) {
  const PrimeDim& dim = phi.dim();
  const double target = 1.0 / (dim.value() + 1);
  SicReport report{dim, {}, 0.0, threshold, false};
  report.overlaps.reserve(static_cast<size_t>(dim.value() * dim.value()));
  for (const auto& p : all_indices(dim)) {
    const Complex amp = phi.amplitudes().dot(displacement(dim, p) * phi.amplitudes());
    const double overlap = std::norm(amp);
    report.overlaps.push_back(overlap);
    if (!p.is_zero()) {
      report.max_deviation = std::max(report.max_deviation, std::abs(overlap - target));
    }
  }
  report.pass = report.max_deviation < threshold;
  return report;
}

double ApplebyReport::max_abs() const {
  double m = sum_squares.size() ? sum_squares.cwiseAbs().maxCoeff() : 0.0;
  if (shifted.size()) m = std::max(m, shifted.cwiseAbs().maxCoeff());
  return m;
}

ApplebyReport appleby_conditions(const ProbabilityTable& probs) {
  const int families = static_cast<int>(probs.p.rows());
  const int d = static_cast<int>(probs.p.cols());
  ApplebyReport out{Eigen::VectorXd(families), Eigen::MatrixXd(families, d - 1)};
  for (int j = 0; j < families; ++j) {
    out.sum_squares(j) = probs.p.row(j).squaredNorm() - 2.0 / (d + 1);
    for (int r = 1; r < d; ++r) {
      double s = 0.0;
      for (int k = 0; k < d; ++k) s += probs.p(j, k) * probs.p(j, (k + r) % d);
      out.shifted(j, r - 1) = s - 1.0 / (d + 1);
    }
  }
  return out;
}

double completeness_check(const ComplexOperator& rho) {
  const PrimeDim dim = dim_of(rho);
  const int d = dim.value();
  ComplexOperator twirl = ComplexOperator::Zero(d, d);
  for (const auto& p : all_indices(dim)) {
    const ComplexOperator dp = displacement(dim, p);
    twirl += dp * rho * dp.adjoint();
  }
  twirl /= static_cast<double>(d);
  return (twirl - ComplexOperator::Identity(d, d)).cwiseAbs().maxCoeff();
}

std::vector<double> schmidt_check(const ComplexOperator& rho) {
  const int d = static_cast<int>(dim_of(rho).value());
  // vec[i d + j] = rho(i, j); the L1 (x) L2 split takes i to L1 and j to L2.
  Eigen::VectorXcd vec(d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) vec(i * d + j) = rho(i, j);
  }
  Eigen::MatrixXcd reshaped(d, d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) reshaped(a, b) = vec(a * d + b);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(reshaped);
  const Eigen::VectorXd& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

StateVector extract_fiducial_vector(const ComplexOperator& rho) {
  const PrimeDim dim = dim_of(rho);
  const ComplexOperator herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexOperator> solver(herm);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("extract_fiducial_vector: eigensolver failed");
  }
  const int top = dim.value() - 1;  // eigenvalues ascend
  const double lambda = solver.eigenvalues()(top);
  if (!(lambda >= kDominantFloor)) {
    throw std::invalid_argument("dominant eigenvalue " + std::to_string(lambda) +
                                " is too small for a fiducial candidate");
  }
  Eigen::VectorXcd v = solver.eigenvectors().col(top).normalized();
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > kPhaseAnchorFloor) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = std::abs(v(i));
      break;
    }
  }
  return StateVector(dim, std::move(v));
}

}  // namespace sicfid
