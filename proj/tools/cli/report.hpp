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

#ifndef SICFID_TOOLS_REPORT_HPP
#define SICFID_TOOLS_REPORT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sicfid/search.hpp"

namespace sicfid::cli {

using RealRows = std::vector<std::vector<double>>;

struct ConfigEcho {
  int restarts = 0;
  int max_iterations = 0;
  double gradient_tolerance = 0.0;
  double objective_tolerance = 0.0;
  std::uint64_t seed = 0;
  double sic_threshold = 0.0;

  friend bool operator==(const ConfigEcho&, const ConfigEcho&) = default;
};

struct CandidateSummary {
  int restart_index = 0;
  double trace3 = 0.0;
  double sic_max_deviation = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;

  friend bool operator==(const CandidateSummary&, const CandidateSummary&) = default;
};

struct BestCandidate {
  int restart_index = 0;
  bool converged = false;
  int iterations = 0;
  RealRows alpha;
  RealRows probabilities;
  double trace2 = 0.0;
  double trace3 = 0.0;
  double f_value = 0.0;
  double min_eigenvalue = 0.0;
  double sic_max_deviation = 0.0;
  double gradient_norm = 0.0;

  friend bool operator==(const BestCandidate&, const BestCandidate&) = default;
};

/// Persistent result of a `search` run.
struct RunReport {
  std::string tool = "sicfid";
  std::string version;
  int dim = 0;
  ConfigEcho config;
  BestCandidate best;
  /// Extracted fiducial amplitudes as [re, im], present when the best
  /// candidate is near-pure.
  std::optional<std::vector<std::array<double, 2>>> fiducial;
  bool passed = false;
  std::vector<CandidateSummary> candidates;
  double duration_seconds = 0.0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

RunReport make_run_report(const SearchConfig& config, const MubSystem& mub,
                          const std::vector<FiducialCandidate>& candidates, double sic_threshold,
                          double duration_seconds);

nlohmann::json to_json(const RunReport& report);
/// Throws sicfid::FormatError on missing or mistyped fields.
RunReport run_report_from_json(const nlohmann::json& j);

}  // namespace sicfid::cli

#endif  // SICFID_TOOLS_REPORT_HPP
