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

#include "sicfid/omega.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sicfid {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

PrimeDim require_odd(PrimeDim dim) {
  if (!dim.is_odd()) {
    throw std::invalid_argument("phase parametrization requires an odd prime dimension");
  }
  return dim;
}

// sum_r cos(alpha(j, r) + 2 pi k r / d)
double cosine_sum(const PhaseVector& phases, int family, int label) {
  const int d = phases.dim().value();
  double s = 0.0;
  for (int r = 1; r <= phases.half(); ++r) {
    // k r reduced mod d keeps the argument small.
    const double shift = kTwoPi * static_cast<double>((label * r) % d) / d;
    s += std::cos(phases.angle(family, r) + shift);
  }
  return s;
}

PrimeDim dim_of(const ComplexOperator& rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("operator must be square");
  return PrimeDim(static_cast<int>(rho.rows()));
}

}  // namespace

double wrap_angle(double radians) {
  double w = std::fmod(radians, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  // fmod of a tiny negative number can round up to exactly 2 pi.
  if (w >= kTwoPi) w = 0.0;
  return w;
}

PhaseVector::PhaseVector(PrimeDim dim)
    : dim_(require_odd(dim)), alpha_(Eigen::MatrixXd::Zero(families(), half())) {}

PhaseVector::PhaseVector(PrimeDim dim, const Eigen::MatrixXd& angles) : PhaseVector(dim) {
  if (angles.rows() != families() || angles.cols() != half()) {
    throw std::invalid_argument("phase table must be " + std::to_string(families()) + " x " +
                                std::to_string(half()) + ", got " +
                                std::to_string(angles.rows()) + " x " +
                                std::to_string(angles.cols()));
  }
  alpha_ = angles.unaryExpr([](double a) { return wrap_angle(a); });
}

PhaseVector PhaseVector::from_flat(PrimeDim dim, std::span<const double> flat) {
  PhaseVector out(dim);
  if (static_cast<int>(flat.size()) != out.size()) {
    throw std::invalid_argument("flat phase vector has " + std::to_string(flat.size()) +
                                " entries, expected " + std::to_string(out.size()));
  }
  for (int j = 0; j < out.families(); ++j) {
    for (int r = 0; r < out.half(); ++r) {
      out.alpha_(j, r) = wrap_angle(flat[static_cast<size_t>(j * out.half() + r)]);
    }
  }
  return out;
}

void PhaseVector::set_angle(int family, int r, double radians) {
  alpha_(family, r - 1) = wrap_angle(radians);
}

std::vector<double> PhaseVector::flat() const {
  std::vector<double> out;
  out.reserve(static_cast<size_t>(size()));
  for (int j = 0; j < families(); ++j) {
    for (int r = 0; r < half(); ++r) out.push_back(alpha_(j, r));
  }
  return out;
}

ProbabilityTable probabilities_from_phases(const PhaseVector& phases) {
  const PrimeDim& dim = phases.dim();
  const int d = dim.value();
  const double scale = 2.0 / (d * std::sqrt(d + 1.0));
  ProbabilityTable out{dim, Eigen::MatrixXd(d + 1, d)};
  for (int j = 0; j <= d; ++j) {
    for (int k = 0; k < d; ++k) {
      out.p(j, k) = 1.0 / d + scale * cosine_sum(phases, j, k);
    }
  }
  return out;
}

ProbabilityTable probabilities_from_rho(const MubSystem& mub, const ComplexOperator& rho) {
  const int d = mub.dim().value();
  if (rho.rows() != d || rho.cols() != d) {
    throw std::invalid_argument("operator dimension does not match the MUB system");
  }
  ProbabilityTable out{mub.dim(), Eigen::MatrixXd(d + 1, d)};
  for (int j = 0; j <= d; ++j) {
    for (int k = 0; k < d; ++k) {
      out.p(j, k) = rho.cwiseProduct(mub.projector(j, k).transpose()).sum().real();
    }
  }
  return out;
}

ComplexOperator rho_from_probabilities(const MubSystem& mub, const ProbabilityTable& probs) {
  const int d = mub.dim().value();
  if (probs.dim != mub.dim() || probs.p.rows() != d + 1 || probs.p.cols() != d) {
    throw std::invalid_argument("probability table does not match the MUB system");
  }
  const double shift = 1.0 / (d + 1);
  ComplexOperator rho = ComplexOperator::Zero(d, d);
  for (int j = 0; j <= d; ++j) {
    for (int k = 0; k < d; ++k) rho += (probs.p(j, k) - shift) * mub.projector(j, k);
  }
  return rho;
}

ComplexOperator rho_from_phases(const MubSystem& mub, const PhaseVector& phases) {
  return rho_from_probabilities(mub, probabilities_from_phases(phases));
}

DisplacementCoefficients displacement_coefficients(const ComplexOperator& rho) {
  const PrimeDim dim = dim_of(rho);
  const int d = dim.value();
  DisplacementCoefficients out{dim, {}};
  out.a.reserve(static_cast<size_t>(d * d));
  for (const auto& p : all_indices(dim)) {
    // Tr(rho D^dagger) = sum_{x,y} rho(x,y) conj(D(x,y)).
    out.a.push_back(rho.cwiseProduct(displacement(dim, p).conjugate()).sum() /
                    static_cast<double>(d));
  }
  return out;
}

Eigen::MatrixXd positivity_margin(const PhaseVector& phases) {
  const int d = phases.dim().value();
  const double offset = std::sqrt(d + 1.0) / 2.0;
  Eigen::MatrixXd m(d + 1, d);
  for (int j = 0; j <= d; ++j) {
    for (int k = 0; k < d; ++k) m(j, k) = cosine_sum(phases, j, k) + offset;
  }
  return m;
}

double probability_upper_bound(const PrimeDim& dim) {
  const double d = dim.value();
  return 1.0 / d + ((d - 1.0) / d) / std::sqrt(d + 1.0);
}

double renyi_total(const ProbabilityTable& probs) {
  double total = 0.0;
  for (int j = 0; j < probs.p.rows(); ++j) {
    const double collision = probs.p.row(j).squaredNorm();
    if (!(collision > 0.0)) {
      throw std::domain_error("family " + std::to_string(j) + " has zero collision probability");
    }
    total -= std::log2(collision);
  }
  return total;
}

double purity_from_probabilities(const ProbabilityTable& probs) {
  return probs.p.squaredNorm() - 1.0;
}

double f_functional(const TripleProductTable& table, const ProbabilityTable& probs) {
  const int n = table.n();
  if (n != probs.p.size()) {
    throw std::invalid_argument("triple-product table does not match probability table");
  }
  // Flat index a = j d + k, matching MubSystem::flat.
  Eigen::VectorXd w(n);
  const int d = static_cast<int>(probs.p.cols());
  for (int a = 0; a < n; ++a) w(a) = probs.p(a / d, a % d);

  double f = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const double wab = w(a) * w(b);
      for (int c = 0; c < n; ++c) f += wab * w(c) * table(a, b, c).real();
    }
  }
  return f;
}

}  // namespace sicfid
