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

// Phase parametrization of the manifold of Weyl-Heisenberg fiducial
// operators in odd prime dimension d.
//
// A point is fixed by (d^2 - 1) / 2 angles alpha(j, r), one row per MUB
// family j = 0..d and r = 1..(d-1)/2. The MUB probabilities are
//
//   p(j, k) = 1/d + (2/d) (d+1)^{-1/2} sum_r cos(alpha(j, r) + 2 pi k r / d)
//
// and the operator is rho = sum_{j,k} (p(j, k) - 1/(d+1)) Pi(j, k). Every such
// rho has Tr rho = Tr rho^2 = 1 and |Tr(rho D_p)|^2 = 1/(d+1) for p != 0, but
// need not be positive. All angles are in radians.

#ifndef SICFID_OMEGA_HPP
#define SICFID_OMEGA_HPP

#include <span>

#include "sicfid/mub.hpp"

namespace sicfid {

/// Free angles of a point of the manifold, stored wrapped into [0, 2 pi).
/// The dependent half alpha(j, d - r) = -alpha(j, r) is never stored.
class PhaseVector {
 public:
  /// All angles zero. Throws std::invalid_argument for d = 2.
  explicit PhaseVector(PrimeDim dim);
  /// `angles` is (d + 1) x (d - 1)/2, column r - 1 holding alpha(j, r).
  PhaseVector(PrimeDim dim, const Eigen::MatrixXd& angles);

  /// Row-major (j outer, r inner) flat layout, as used by the optimizer.
  static PhaseVector from_flat(PrimeDim dim, std::span<const double> flat);

  const PrimeDim& dim() const { return dim_; }
  int families() const { return dim_.value() + 1; }
  int half() const { return (dim_.value() - 1) / 2; }
  /// (d^2 - 1) / 2.
  int size() const { return families() * half(); }

  /// r runs over 1..half().
  double angle(int family, int r) const { return alpha_(family, r - 1); }
  void set_angle(int family, int r, double radians);

  const Eigen::MatrixXd& angles() const { return alpha_; }
  std::vector<double> flat() const;

  friend bool operator==(const PhaseVector&, const PhaseVector&) = default;

 private:
  PrimeDim dim_;
  Eigen::MatrixXd alpha_;
};

double wrap_angle(double radians);

/// p(j, k): rows are families 0..d, columns labels 0..d-1. Entries may be
/// negative for operators that are not states.
struct ProbabilityTable {
  PrimeDim dim;
  Eigen::MatrixXd p;

  double at(int family, int label) const { return p(family, label); }
  friend bool operator==(const ProbabilityTable&, const ProbabilityTable&) = default;
};

/// a(p) = Tr(rho D_p^dagger) / d, so that rho = sum_p a(p) D_p.
struct DisplacementCoefficients {
  PrimeDim dim;
  /// Indexed by DisplacementIndex::flat.
  std::vector<Complex> a;

  const Complex& at(const DisplacementIndex& p) const {
    return a[static_cast<size_t>(p.flat(dim))];
  }
};

ProbabilityTable probabilities_from_phases(const PhaseVector& phases);

/// p(j, k) = Tr(rho Pi(j, k)) for an arbitrary operator.
ProbabilityTable probabilities_from_rho(const MubSystem& mub, const ComplexOperator& rho);

ComplexOperator rho_from_probabilities(const MubSystem& mub, const ProbabilityTable& probs);
ComplexOperator rho_from_phases(const MubSystem& mub, const PhaseVector& phases);

/// Expansion of rho over the displacement basis. rho must be square with
/// prime size.
DisplacementCoefficients displacement_coefficients(const ComplexOperator& rho);

/// m(j, k) = sum_r cos(alpha(j, r) + 2 pi k r / d) + sqrt(d + 1) / 2, which is
/// nonnegative exactly when p(j, k) is.
Eigen::MatrixXd positivity_margin(const PhaseVector& phases);

/// 1/d + ((d - 1)/d) (d + 1)^{-1/2}; no point of the manifold has a larger
/// MUB probability.
double probability_upper_bound(const PrimeDim& dim);

/// T = -sum_j log2(sum_k p(j, k)^2). Constant (d+1) log2((d+1)/2) on the
/// manifold. Throws std::domain_error if some family has zero collision
/// probability.
double renyi_total(const ProbabilityTable& probs);

/// sum_{j,k} p(j, k)^2 - 1, which equals Tr rho^2.
double purity_from_probabilities(const ProbabilityTable& probs);

/// F = sum_{a,b,c} p_a p_b p_c Tr(Pi_a Pi_b Pi_c) over flat projector indices.
/// Equals Tr rho^3 + d + 6 on the manifold.
double f_functional(const TripleProductTable& table, const ProbabilityTable& probs);

}  // namespace sicfid

#endif  // SICFID_OMEGA_HPP
