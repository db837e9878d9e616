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

#ifndef SICFID_WH_GROUP_HPP
#define SICFID_WH_GROUP_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace sicfid {

using Complex = std::complex<double>;

/// Dense d x d operator. Row index is the output basis state, column index
/// the input basis state.
using ComplexOperator = Eigen::MatrixXcd;

bool is_prime(int n);

/// A validated prime Hilbert-space dimension together with the roots of
/// unity the Weyl-Heisenberg construction is built from:
///   omega = exp(2 pi i / d),   tau = -exp(i pi / d).
///
/// Powers are evaluated from reduced exponents rather than by repeated
/// multiplication, so omega_pow(k) is accurate to one ulp for any k.
class PrimeDim {
 public:
  /// Throws std::invalid_argument when d is not prime.
  explicit PrimeDim(int d);

  int value() const { return d_; }
  bool is_odd() const { return d_ % 2 == 1; }

  Complex omega() const { return omega_pow(1); }
  Complex tau() const { return tau_pow(1); }

  Complex omega_pow(long long k) const;
  Complex tau_pow(long long m) const;

  /// Multiplicative order of tau: d for odd d, 4 for d = 2.
  int tau_order() const { return is_odd() ? d_ : 2 * d_; }

  /// Reduces k into [0, d).
  int mod(long long k) const;
  /// Multiplicative inverse of a nonzero residue.
  int inverse(int a) const;

  friend bool operator==(const PrimeDim&, const PrimeDim&) = default;

 private:
  int d_;
};

/// Element p = (p1, p2) of Z_d x Z_d.
struct DisplacementIndex {
  int p1 = 0;
  int p2 = 0;

  bool is_zero() const { return p1 == 0 && p2 == 0; }
  /// Row-major position in a d*d table.
  int flat(const PrimeDim& dim) const { return p1 * dim.value() + p2; }

  friend bool operator==(const DisplacementIndex&, const DisplacementIndex&) = default;
};

/// Throws std::out_of_range unless 0 <= p1, p2 < d.
void check_index(const PrimeDim& dim, const DisplacementIndex& p);

/// All d^2 indices in row-major order, (0,0) first.
std::vector<DisplacementIndex> all_indices(const PrimeDim& dim);

ComplexOperator shift_op(const PrimeDim& dim);
ComplexOperator phase_op(const PrimeDim& dim);

/// D_p = tau^{p1 p2} X^{p1} Z^{p2}.
ComplexOperator displacement(const PrimeDim& dim, const DisplacementIndex& p);

/// <p, q> = p2 q1 - q2 p1 mod d. D_p D_q = tau^{<p,q> - <q,p>} D_q D_p.
int symplectic_form(const PrimeDim& dim, const DisplacementIndex& p, const DisplacementIndex& q);

/// D_p = tau^{phase_exponent} (D_base)^{exponent}, with base = (1, p2/p1) when
/// p1 != 0 and base = (0, 1) otherwise.
struct IndexReduction {
  DisplacementIndex base;
  int exponent = 0;
  /// Reduced modulo dim.tau_order().
  int phase_exponent = 0;

  friend bool operator==(const IndexReduction&, const IndexReduction&) = default;
};

/// Rejects p = (0,0) with std::invalid_argument.
IndexReduction reduce_index(const PrimeDim& dim, const DisplacementIndex& p);

}  // namespace sicfid

#endif  // SICFID_WH_GROUP_HPP
