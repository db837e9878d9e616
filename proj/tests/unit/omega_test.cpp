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
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace sicfid {
namespace {

using testing::max_abs_diff;
using testing::random_phases;

constexpr int kOddPrimes[] = {3, 5, 7, 11, 13};
constexpr double kPi = std::numbers::pi;

TEST(PhaseVector, ShapeAndWrapping) {
  const PhaseVector v(PrimeDim(7));
  EXPECT_EQ(v.size(), (49 - 1) / 2);
  EXPECT_EQ(v.families(), 8);
  EXPECT_EQ(v.half(), 3);
  EXPECT_THROW(PhaseVector(PrimeDim(2)), std::invalid_argument);
  EXPECT_THROW(PhaseVector(PrimeDim(5), Eigen::MatrixXd::Zero(6, 3)), std::invalid_argument);

  PhaseVector w(PrimeDim(3));
  w.set_angle(0, 1, -kPi / 2);
  EXPECT_NEAR(w.angle(0, 1), 3 * kPi / 2, 1e-15);
  w.set_angle(1, 1, 5 * kPi);
  EXPECT_NEAR(w.angle(1, 1), kPi, 1e-14);
  EXPECT_EQ(wrap_angle(-1e-300), 0.0);
  EXPECT_GE(wrap_angle(-1e-17), 0.0);
  EXPECT_LT(wrap_angle(-1e-17), 2 * kPi);
}

TEST(PhaseVector, FlatRoundTrip) {
  std::mt19937_64 rng(11);
  const PhaseVector v = random_phases(PrimeDim(7), rng);
  const auto flat = v.flat();
  EXPECT_EQ(PhaseVector::from_flat(PrimeDim(7), flat), v);
  EXPECT_THROW(PhaseVector::from_flat(PrimeDim(7), std::span(flat).first(5)),
               std::invalid_argument);
}

TEST(Probabilities, ZeroPhasesQutrit) {
  const ProbabilityTable t = probabilities_from_phases(PhaseVector(PrimeDim(3)));
  for (int j = 0; j < 4; ++j) {
    EXPECT_NEAR(t.at(j, 0), 2.0 / 3, 1e-15);
    EXPECT_NEAR(t.at(j, 1), 1.0 / 6, 1e-15);
    EXPECT_NEAR(t.at(j, 2), 1.0 / 6, 1e-15);
    EXPECT_NEAR(t.p.row(j).squaredNorm(), 0.5, 1e-15);
  }
}

TEST(Probabilities, MatchesFullExponentialSum) {
  std::mt19937_64 rng(3);
  for (int d : kOddPrimes) {
    for (int trial = 0; trial < 10; ++trial) {
      const PhaseVector v = random_phases(PrimeDim(d), rng);
      EXPECT_LT(max_abs_diff(probabilities_from_phases(v).p, testing::brute_probabilities(v)),
                1e-14);
    }
  }
}

TEST(Probabilities, RowsSumToOne) {
  std::mt19937_64 rng(5);
  for (int d : kOddPrimes) {
    for (int trial = 0; trial < 20; ++trial) {
      const ProbabilityTable t = probabilities_from_phases(random_phases(PrimeDim(d), rng));
      for (int j = 0; j <= d; ++j) EXPECT_NEAR(t.p.row(j).sum(), 1.0, 1e-14);
      EXPECT_NEAR(t.p.squaredNorm(), 2.0, 1e-10);
    }
  }
}

TEST(Rho, UniformProbabilitiesGiveMaximallyMixed) {
  for (int d : {3, 5, 7}) {
    const MubSystem mub = build_mub(PrimeDim(d));
    const ProbabilityTable uniform{PrimeDim(d), Eigen::MatrixXd::Constant(d + 1, d, 1.0 / d)};
    EXPECT_LT(max_abs_diff(rho_from_probabilities(mub, uniform),
                           ComplexOperator::Identity(d, d) / static_cast<double>(d)),
              1e-12);
  }
}

TEST(Rho, ZeroPhasesQutrit) {
  const MubSystem mub = build_mub(PrimeDim(3));
  const ComplexOperator rho = rho_from_phases(mub, PhaseVector(PrimeDim(3)));
  EXPECT_NEAR(std::abs(rho.trace() - 1.0), 0.0, 1e-12);
  EXPECT_NEAR((rho * rho).trace().real(), 1.0, 1e-12);
  EXPECT_LT(max_abs_diff(rho, rho.adjoint()), 1e-14);
}

TEST(Rho, DefiningOverlapProperty) {
  std::mt19937_64 rng(17);
  for (int d : {3, 5, 7}) {
    const PrimeDim dim(d);
    const MubSystem mub = build_mub(dim);
    for (int trial = 0; trial < 5; ++trial) {
      const ComplexOperator rho = rho_from_phases(mub, random_phases(dim, rng));
      for (const auto& p : all_indices(dim)) {
        if (p.is_zero()) continue;
        const double ov =
            std::norm((rho * testing::brute_displacement(d, p.p1, p.p2)).trace());
        EXPECT_NEAR(ov, 1.0 / (d + 1), 1e-10);
      }
    }
  }
}

TEST(Rho, ProbabilitiesRecoveredFromOperator) {
  std::mt19937_64 rng(19);
  const MubSystem mub = build_mub(PrimeDim(5));
  const PhaseVector v = random_phases(PrimeDim(5), rng);
  const ProbabilityTable t = probabilities_from_phases(v);
  EXPECT_LT(max_abs_diff(probabilities_from_rho(mub, rho_from_probabilities(mub, t)).p, t.p),
            1e-12);
}

TEST(DisplacementCoefficients, MaximallyMixed) {
  const int d = 5;
  const DisplacementCoefficients c =
      displacement_coefficients(ComplexOperator::Identity(d, d) / static_cast<double>(d));
  EXPECT_NEAR(std::abs(c.at({0, 0}) - 0.2), 0.0, 1e-15);
  for (const auto& p : all_indices(PrimeDim(d))) {
    if (!p.is_zero()) EXPECT_LT(std::abs(c.at(p)), 1e-15);
  }
}

TEST(DisplacementCoefficients, ModulusOnManifold) {
  std::mt19937_64 rng(23);
  for (int d : kOddPrimes) {
    const PrimeDim dim(d);
    const MubSystem mub = build_mub(dim);
    const DisplacementCoefficients c =
        displacement_coefficients(rho_from_phases(mub, random_phases(dim, rng)));
    EXPECT_NEAR(std::abs(c.at({0, 0}) - 1.0 / d), 0.0, 1e-12);
    for (const auto& p : all_indices(dim)) {
      if (!p.is_zero()) EXPECT_NEAR(std::abs(c.at(p)), 1.0 / (d * std::sqrt(d + 1.0)), 1e-10);
    }
  }
}

TEST(DisplacementCoefficients, RoundTripRandomHermitian) {
  std::mt19937_64 rng(29);
  for (int d : {2, 3, 5, 7}) {
    const ComplexOperator h = testing::random_hermitian_trace_one(d, rng);
    const DisplacementCoefficients c = displacement_coefficients(h);
    ComplexOperator rebuilt = ComplexOperator::Zero(d, d);
    for (const auto& p : all_indices(PrimeDim(d))) {
      rebuilt += c.at(p) * testing::brute_displacement(d, p.p1, p.p2);
    }
    EXPECT_LT(max_abs_diff(rebuilt, h), 1e-12);
  }
  EXPECT_THROW(displacement_coefficients(ComplexOperator::Identity(4, 4)), std::invalid_argument);
}

TEST(PositivityMargin, Examples) {
  PhaseVector v(PrimeDim(3));
  EXPECT_NEAR(positivity_margin(v)(0, 0), 2.0, 1e-15);
  v.set_angle(0, 1, kPi);
  EXPECT_NEAR(positivity_margin(v)(0, 0), 0.0, 1e-15);
  EXPECT_NEAR(probabilities_from_phases(v).at(0, 0), 0.0, 1e-15);
}

TEST(PositivityMargin, SignAgreesWithProbability) {
  std::mt19937_64 rng(31);
  int negative = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = kOddPrimes[trial % 5];
    const PhaseVector v = random_phases(PrimeDim(d), rng);
    const Eigen::MatrixXd m = positivity_margin(v);
    const ProbabilityTable t = probabilities_from_phases(v);
    for (int j = 0; j <= d; ++j) {
      for (int k = 0; k < d; ++k) {
        EXPECT_EQ(m(j, k) >= 0.0, t.at(j, k) >= 0.0);
        negative += t.at(j, k) < 0.0;
      }
    }
  }
  EXPECT_GT(negative, 0);  // the sweep exercises both signs
}

TEST(ProbabilityBound, Values) {
  EXPECT_NEAR(probability_upper_bound(PrimeDim(3)), 2.0 / 3, 1e-15);
  EXPECT_NEAR(probability_upper_bound(PrimeDim(5)), 0.2 + 0.8 / std::sqrt(6.0), 1e-15);
  EXPECT_NEAR(probability_upper_bound(PrimeDim(5)), 0.526599, 1e-6);
  // Saturated by alpha = 0, k = 0 at d = 3.
  EXPECT_NEAR(probabilities_from_phases(PhaseVector(PrimeDim(3))).at(0, 0),
              probability_upper_bound(PrimeDim(3)), 1e-15);
}

TEST(ProbabilityBound, HoldsOnRandomPoints) {
  std::mt19937_64 rng(37);
  for (int d : kOddPrimes) {
    const double bound = probability_upper_bound(PrimeDim(d));
    for (int trial = 0; trial < 100; ++trial) {
      EXPECT_LE(probabilities_from_phases(random_phases(PrimeDim(d), rng)).p.maxCoeff(),
                bound + 1e-12);
    }
  }
}

TEST(Renyi, ConstantOnManifold) {
  std::mt19937_64 rng(41);
  for (int d : kOddPrimes) {
    const double expected = (d + 1) * std::log2((d + 1) / 2.0);
    for (int trial = 0; trial < 20; ++trial) {
      EXPECT_NEAR(renyi_total(probabilities_from_phases(random_phases(PrimeDim(d), rng))),
                  expected, 1e-10);
    }
  }
  EXPECT_NEAR(renyi_total(probabilities_from_phases(PhaseVector(PrimeDim(3)))), 4.0, 1e-12);
  EXPECT_NEAR(renyi_total(probabilities_from_phases(PhaseVector(PrimeDim(5)))), 9.509775, 1e-6);
}

TEST(Renyi, UniformTableIsLarger) {
  for (int d : kOddPrimes) {
    const ProbabilityTable uniform{PrimeDim(d), Eigen::MatrixXd::Constant(d + 1, d, 1.0 / d)};
    const double t = renyi_total(uniform);
    EXPECT_NEAR(t, (d + 1) * std::log2(static_cast<double>(d)), 1e-12);
    EXPECT_GT(t, (d + 1) * std::log2((d + 1) / 2.0));
  }
}

TEST(Renyi, FlagsZeroRow) {
  ProbabilityTable t{PrimeDim(3), Eigen::MatrixXd::Constant(4, 3, 1.0 / 3)};
  t.p.row(2).setZero();
  EXPECT_THROW(renyi_total(t), std::domain_error);
}

TEST(Purity, FromProbabilities) {
  for (int d : kOddPrimes) {
    const ProbabilityTable uniform{PrimeDim(d), Eigen::MatrixXd::Constant(d + 1, d, 1.0 / d)};
    EXPECT_NEAR(purity_from_probabilities(uniform), 1.0 / d, 1e-14);
  }
  std::mt19937_64 rng(43);
  for (int d : kOddPrimes) {
    const MubSystem mub = build_mub(PrimeDim(d));
    for (int trial = 0; trial < 10; ++trial) {
      const ProbabilityTable t = probabilities_from_phases(random_phases(PrimeDim(d), rng));
      const ComplexOperator rho = rho_from_probabilities(mub, t);
      EXPECT_NEAR(purity_from_probabilities(t), 1.0, 1e-10);
      EXPECT_NEAR(purity_from_probabilities(t), (rho * rho).trace().real(), 1e-10);
    }
  }
}

TEST(FFunctional, IdentityOnManifold) {
  std::mt19937_64 rng(47);
  for (int d : {3, 5}) {
    const MubSystem mub = build_mub(PrimeDim(d));
    const TripleProductTable table = triple_products(mub);
    for (int trial = 0; trial < 5; ++trial) {
      const PhaseVector v = random_phases(PrimeDim(d), rng);
      const double f = f_functional(table, probabilities_from_phases(v));
      EXPECT_NEAR(f, testing::trace_cube(rho_from_phases(mub, v)) + d + 6, 1e-8);
    }
  }
}

}  // namespace
}  // namespace sicfid
