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

#include "sicfid/wh_group.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace sicfid {

namespace {

ComplexOperator matrix_power(const ComplexOperator& m, int e) {
  ComplexOperator result = ComplexOperator::Identity(m.rows(), m.cols());
  for (int i = 0; i < e; ++i) result = result * m;
  return result;
}

long long floor_mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

PrimeDim::PrimeDim(int d) : d_(d) {
  if (!is_prime(d)) {
    throw std::invalid_argument("dimension must be prime, got " + std::to_string(d));
  }
}

int PrimeDim::mod(long long k) const { return static_cast<int>(floor_mod(k, d_)); }

int PrimeDim::inverse(int a) const {
  a = mod(a);
  if (a == 0) throw std::invalid_argument("zero has no inverse mod d");
  // Fermat: a^{d-2} mod d.
  long long result = 1;
  for (int i = 0; i < d_ - 2; ++i) result = (result * a) % d_;
  return static_cast<int>(result);
}

Complex PrimeDim::omega_pow(long long k) const {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod(k)) / d_;
  return std::polar(1.0, angle);
}

Complex PrimeDim::tau_pow(long long m) const {
  // tau = exp(i pi (d + 1) / d), so tau^m only depends on m (d + 1) mod 2d.
  const long long n = floor_mod(floor_mod(m, 2LL * d_) * (d_ + 1), 2LL * d_);
  return std::polar(1.0, std::numbers::pi * static_cast<double>(n) / d_);
}

void check_index(const PrimeDim& dim, const DisplacementIndex& p) {
  const int d = dim.value();
  if (p.p1 < 0 || p.p1 >= d || p.p2 < 0 || p.p2 >= d) {
    throw std::out_of_range("displacement index (" + std::to_string(p.p1) + ", " +
                            std::to_string(p.p2) + ") outside Z_" + std::to_string(d));
  }
}

std::vector<DisplacementIndex> all_indices(const PrimeDim& dim) {
  std::vector<DisplacementIndex> out;
  out.reserve(static_cast<size_t>(dim.value() * dim.value()));
  for (int p1 = 0; p1 < dim.value(); ++p1) {
    for (int p2 = 0; p2 < dim.value(); ++p2) out.push_back({p1, p2});
  }
  return out;
}

ComplexOperator shift_op(const PrimeDim& dim) {
  const int d = dim.value();
  ComplexOperator x = ComplexOperator::Zero(d, d);
  for (int k = 0; k < d; ++k) x((k + 1) % d, k) = 1.0;
  return x;
}

ComplexOperator phase_op(const PrimeDim& dim) {
  const int d = dim.value();
  ComplexOperator z = ComplexOperator::Zero(d, d);
  for (int k = 0; k < d; ++k) z(k, k) = dim.omega_pow(k);
  return z;
}

ComplexOperator displacement(const PrimeDim& dim, const DisplacementIndex& p) {
  check_index(dim, p);
  return dim.tau_pow(static_cast<long long>(p.p1) * p.p2) *
         (matrix_power(shift_op(dim), p.p1) * matrix_power(phase_op(dim), p.p2));
}

int symplectic_form(const PrimeDim& dim, const DisplacementIndex& p, const DisplacementIndex& q) {
  check_index(dim, p);
  check_index(dim, q);
  return dim.mod(static_cast<long long>(p.p2) * q.p1 - static_cast<long long>(q.p2) * p.p1);
}

IndexReduction reduce_index(const PrimeDim& dim, const DisplacementIndex& p) {
  check_index(dim, p);
  if (p.is_zero()) {
    throw std::invalid_argument("reduce_index: the identity (0,0) has no base element");
  }
  if (p.p1 == 0) return {{0, 1}, p.p2, 0};

  const int slope = dim.mod(static_cast<long long>(p.p2) * dim.inverse(p.p1));
  // (D_{(1,s)})^e = tau^{s e^2} X^e Z^{s e} and D_p = tau^{p1 p2} X^{p1} Z^{p2}
  // with s p1 = p2 mod d; the leftover phase is tau^{p1 p2 - s p1^2}.
  const long long e = p.p1;
  const long long m = e * p.p2 - static_cast<long long>(slope) * e * e;
  return {{1, slope}, p.p1, static_cast<int>(floor_mod(m, dim.tau_order()))};
}

}  // namespace sicfid
