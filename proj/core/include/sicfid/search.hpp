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

// Fiducial search: maximize Tr rho^3 over the phase manifold. Every point
// already has Tr rho = Tr rho^2 = 1, so Tr rho^3 <= 1 with equality exactly at
// rank-one projectors, i.e. at fiducial states.

#ifndef SICFID_SEARCH_HPP
#define SICFID_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "sicfid/omega.hpp"

namespace sicfid {

struct SearchConfig {
  PrimeDim dim;
  int restarts = 100;
  int max_iterations = 10000;
  double gradient_tolerance = 1e-10;
  double objective_tolerance = 1e-12;
  std::uint64_t rng_seed = 0;

  /// Throws std::invalid_argument on an even dimension, restarts < 1,
  /// max_iterations < 1 or non-positive tolerances.
  void validate() const;

  friend bool operator==(const SearchConfig&, const SearchConfig&) = default;
};

struct FiducialCandidate {
  PhaseVector phases;
  double trace2 = 0.0;
  double trace3 = 0.0;
  /// From the triple-product table when one was supplied, otherwise from
  /// Tr (rho + 1)^3 = Tr rho^3 + 3 Tr rho^2 + 3 Tr rho + d.
  double f_value = 0.0;
  double min_eigenvalue = 0.0;
  /// SIC deviation of the dominant eigenvector of rho.
  double sic_max_deviation = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  int restart_index = 0;
  bool converged = false;
};

/// Tr rho^3 for rho = rho_from_phases(mub, phases).
double objective(const MubSystem& mub, const PhaseVector& phases);

/// d Tr rho^3 / d alpha(j, r), laid out like PhaseVector::angles().
Eigen::MatrixXd gradient(const MubSystem& mub, const PhaseVector& phases);

/// Fills every diagnostic field of a candidate at the given phases; the
/// optimizer bookkeeping fields are left at their defaults.
FiducialCandidate evaluate_candidate(const MubSystem& mub, const PhaseVector& phases,
                                     const TripleProductTable* table = nullptr);

/// Called once per accepted iterate (iteration 0 is the start point).
using AscentObserver = std::function<void(int iteration, double objective)>;

/// Quasi-Newton (BFGS) ascent with backtracking Armijo line search. The
/// objective never decreases between iterates. Stops when the gradient norm
/// drops below config.gradient_tolerance, when an accepted step changes the
/// objective by less than config.objective_tolerance, or after
/// config.max_iterations; only the first two set `converged`. After an
/// objective-change exit, Newton steps on the analytic Hessian continue while
/// the gradient norm shrinks and the objective does not drop, up to the
/// gradient tolerance and the same iteration cap.
FiducialCandidate local_ascent(const MubSystem& mub, const PhaseVector& start,
                               const SearchConfig& config,
                               const TripleProductTable* table = nullptr,
                               const AscentObserver& observer = {});

/// The restart_index-th starting point: every angle uniform in [0, 2 pi),
/// drawn from a generator seeded by (config.rng_seed, restart_index) only.
PhaseVector starting_point(const SearchConfig& config, int restart_index);

/// Runs local_ascent from config.restarts starting points on up to `threads`
/// workers (0 means one per hardware thread). Results are independent of the
/// thread count. Sorted by trace3 descending, then sic_max_deviation
/// ascending, then restart index. f_value uses the triple-product table when
/// d <= TripleProductTable::kDefaultMaxDim.
std::vector<FiducialCandidate> multi_start(const MubSystem& mub, const SearchConfig& config,
                                           unsigned threads = 1);

}  // namespace sicfid

#endif  // SICFID_SEARCH_HPP
