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

#ifndef SICFID_MUB_HPP
#define SICFID_MUB_HPP

#include <vector>

#include "sicfid/wh_group.hpp"

namespace sicfid {

/// The d + 1 mutually unbiased bases of a prime dimension, stored as
/// rank-one projectors Pi(j, k).
///
/// Family j < d is the eigenbasis of D_{(1,j)}; family d is the canonical
/// basis. Within a family, label k marks the eigenvalue omega^k (of
/// D_{(1,j)}, or of Z for the canonical family). Eigenvector phases never
/// enter, only projectors are kept.
class MubSystem {
 public:
  MubSystem(PrimeDim dim, std::vector<ComplexOperator> projectors);

  const PrimeDim& dim() const { return dim_; }
  int families() const { return dim_.value() + 1; }
  /// (d + 1) * d.
  int size() const { return static_cast<int>(projectors_.size()); }

  const ComplexOperator& projector(int family, int label) const {
    return projectors_[static_cast<size_t>(flat(family, label))];
  }
  const ComplexOperator& projector(int flat_index) const {
    return projectors_[static_cast<size_t>(flat_index)];
  }
  int flat(int family, int label) const { return family * dim_.value() + label; }

 private:
  PrimeDim dim_;
  std::vector<ComplexOperator> projectors_;
};

/// Builds every family from an eigendecomposition of its generator.
/// Throws std::runtime_error if an eigenvalue lies farther than 1e-8 from
/// every d-th root of unity, or if two eigenvalues claim the same label.
MubSystem build_mub(const PrimeDim& dim);

/// Rebuilds D_p from the spectral projectors of its family. Rejects p = (0,0).
ComplexOperator reconstruct_displacement(const MubSystem& mub, const DisplacementIndex& p);

/// Table of Tr(Pi_a Pi_b Pi_c) over flat projector indices a, b, c.
class TripleProductTable {
 public:
  static constexpr int kDefaultMaxDim = 7;

  TripleProductTable(int n, std::vector<Complex> values);

  /// Number of projectors, (d + 1) * d.
  int n() const { return n_; }
  const Complex& operator()(int a, int b, int c) const {
    return values_[(static_cast<size_t>(a) * n_ + b) * n_ + c];
  }

 private:
  int n_;
  std::vector<Complex> values_;
};

/// Refuses dimensions above max_dim with std::invalid_argument; the table has
/// ((d + 1) d)^3 entries.
TripleProductTable triple_products(const MubSystem& mub,
                                   int max_dim = TripleProductTable::kDefaultMaxDim);

}  // namespace sicfid

#endif  // SICFID_MUB_HPP
