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

#include "sicfid/mub.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

namespace sicfid {

namespace {

constexpr double kRootMatchTolerance = 1e-8;

// Label k with |lambda - omega^k| minimal, or -1 if none is within tolerance.
int root_of_unity_label(const PrimeDim& dim, const Complex& lambda) {
  for (int k = 0; k < dim.value(); ++k) {
    if (std::abs(lambda - dim.omega_pow(k)) < kRootMatchTolerance) return k;
  }
  return -1;
}

void append_eigenbasis(const PrimeDim& dim, const ComplexOperator& generator, int family,
                       std::vector<ComplexOperator>& out) {
  const int d = dim.value();
  Eigen::ComplexEigenSolver<ComplexOperator> solver(generator);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigensolver failed for MUB family " + std::to_string(family));
  }
  std::vector<ComplexOperator> labeled(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    const Complex lambda = solver.eigenvalues()(i);
    const int k = root_of_unity_label(dim, lambda);
    if (k < 0) {
      throw std::runtime_error("eigenvalue (" + std::to_string(lambda.real()) + ", " +
                               std::to_string(lambda.imag()) + ") of family " +
                               std::to_string(family) + " is not a d-th root of unity");
    }
    if (labeled[static_cast<size_t>(k)].size() != 0) {
      throw std::runtime_error("degenerate spectrum in family " + std::to_string(family));
    }
    const Eigen::VectorXcd v = solver.eigenvectors().col(i).normalized();
    labeled[static_cast<size_t>(k)] = v * v.adjoint();
  }
  for (auto& p : labeled) out.push_back(std::move(p));
}

}  // namespace

MubSystem::MubSystem(PrimeDim dim, std::vector<ComplexOperator> projectors)
    : dim_(dim), projectors_(std::move(projectors)) {
  const int d = dim_.value();
  if (static_cast<int>(projectors_.size()) != (d + 1) * d) {
    throw std::invalid_argument("MubSystem needs (d+1)*d projectors");
  }
  for (const auto& p : projectors_) {
    if (p.rows() != d || p.cols() != d) {
      throw std::invalid_argument("MubSystem projector has wrong shape");
    }
  }
}

MubSystem build_mub(const PrimeDim& dim) {
  const int d = dim.value();
  std::vector<ComplexOperator> projectors;
  projectors.reserve(static_cast<size_t>((d + 1) * d));
  for (int j = 0; j < d; ++j) {
    append_eigenbasis(dim, displacement(dim, {1, j}), j, projectors);
  }
  for (int k = 0; k < d; ++k) {
    ComplexOperator p = ComplexOperator::Zero(d, d);
    p(k, k) = 1.0;
    projectors.push_back(std::move(p));
  }
  return MubSystem(dim, std::move(projectors));
}

ComplexOperator reconstruct_displacement(const MubSystem& mub, const DisplacementIndex& p) {
  const PrimeDim& dim = mub.dim();
  const IndexReduction red = reduce_index(dim, p);
  const int family = red.base.p1 == 0 ? dim.value() : red.base.p2;

  ComplexOperator out = ComplexOperator::Zero(dim.value(), dim.value());
  for (int k = 0; k < dim.value(); ++k) {
    out += dim.omega_pow(static_cast<long long>(k) * red.exponent) * mub.projector(family, k);
  }
  return dim.tau_pow(red.phase_exponent) * out;
}

TripleProductTable::TripleProductTable(int n, std::vector<Complex> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != static_cast<size_t>(n) * n * n) {
    throw std::invalid_argument("TripleProductTable: size mismatch");
  }
}

TripleProductTable triple_products(const MubSystem& mub, int max_dim) {
  if (mub.dim().value() > max_dim) {
    throw std::invalid_argument("triple_products: dimension " +
                                std::to_string(mub.dim().value()) + " exceeds cap " +
                                std::to_string(max_dim));
  }
  const int n = mub.size();
  std::vector<Complex> values(static_cast<size_t>(n) * n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const ComplexOperator ab = mub.projector(a) * mub.projector(b);
      for (int c = 0; c < n; ++c) {
        // Tr(AB C) = sum_{x,y} (AB)(x,y) C(y,x).
        values[(static_cast<size_t>(a) * n + b) * n + c] =
            ab.cwiseProduct(mub.projector(c).transpose()).sum();
      }
    }
  }
  return TripleProductTable(n, std::move(values));
}

}  // namespace sicfid
