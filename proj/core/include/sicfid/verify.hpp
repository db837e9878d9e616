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

// Certification checks that do not depend on the phase parametrization.
// Everything here accepts d = 2.

#ifndef SICFID_VERIFY_HPP
#define SICFID_VERIFY_HPP

#include <vector>

#include "sicfid/omega.hpp"

namespace sicfid {

inline constexpr double kDefaultSicThreshold = 1e-6;

/// A unit vector in C^d. Construction throws std::invalid_argument when the
/// length is not d or the norm is off by more than 1e-8.
class StateVector {
 public:
  StateVector(PrimeDim dim, Eigen::VectorXcd amplitudes);

  const PrimeDim& dim() const { return dim_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  PrimeDim dim_;
  Eigen::VectorXcd amplitudes_;
};

struct SicReport {
  PrimeDim dim;
  /// |<phi|D_p|phi>|^2 indexed by DisplacementIndex::flat.
  std::vector<double> overlaps;
  /// max over p != 0 of |overlap - 1/(d+1)|.
  double max_deviation = 0.0;
  double threshold = kDefaultSicThreshold;
  bool pass = false;
};

SicReport sic_overlaps(const StateVector& phi, double threshold = kDefaultSicThreshold);

/// Residuals of the two autocorrelation identities characterizing fiducial
/// MUB distributions.
struct ApplebyReport {
  /// sum_k p(j,k)^2 - 2/(d+1), one per family.
  Eigen::VectorXd sum_squares;
  /// sum_k p(j,k) p(j,k+r) - 1/(d+1); column r - 1 for r = 1..d-1.
  Eigen::MatrixXd shifted;

  double max_abs() const;
};

ApplebyReport appleby_conditions(const ProbabilityTable& probs);

/// max-norm distance of (1/d) sum_p D_p rho D_p^dagger from the identity.
double completeness_check(const ComplexOperator& rho);

/// Singular values (descending) of the row-major vectorization of rho,
/// reshaped into a d x d matrix over the split C^{d^2} = C^d (x) C^d.
std::vector<double> schmidt_check(const ComplexOperator& rho);

/// Dominant eigenvector of a near-pure rho, phase-fixed so that the first
/// entry with modulus above 1e-10 is real and positive. Throws
/// std::invalid_argument if the dominant eigenvalue is below 1 - 1e-4.
StateVector extract_fiducial_vector(const ComplexOperator& rho);

}  // namespace sicfid

#endif  // SICFID_VERIFY_HPP
