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

#include "report.hpp"

#include <stdexcept>

#include "sicfid/io.hpp"
#include "sicfid/version.hpp"

namespace sicfid::cli {

using nlohmann::json;

namespace {

// Pure enough to be worth extracting a vector from.
constexpr double kNearPureTrace3 = 1.0 - 1e-6;

RealRows rows_of(const Eigen::MatrixXd& m) {
  RealRows out(static_cast<size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int c = 0; c < m.cols(); ++c) out[static_cast<size_t>(i)].push_back(m(i, c));
  }
  return out;
}

}  // namespace

RunReport make_run_report(const SearchConfig& config, const MubSystem& mub,
                          const std::vector<FiducialCandidate>& candidates, double sic_threshold,
                          double duration_seconds) {
  if (candidates.empty()) throw std::invalid_argument("make_run_report: no candidates");
  RunReport r;
  r.version = kVersion;
  r.dim = config.dim.value();
  r.config = {config.restarts,           config.max_iterations, config.gradient_tolerance,
              config.objective_tolerance, config.rng_seed,       sic_threshold};

  const FiducialCandidate& best = candidates.front();
  const ProbabilityTable probs = probabilities_from_phases(best.phases);
  r.best = {best.restart_index,   best.converged,         best.iterations,
            rows_of(best.phases.angles()), rows_of(probs.p),   best.trace2,
            best.trace3,          best.f_value,           best.min_eigenvalue,
            best.sic_max_deviation, best.gradient_norm};

  if (best.trace3 >= kNearPureTrace3) {
    try {
      const StateVector phi = extract_fiducial_vector(rho_from_probabilities(mub, probs));
      std::vector<std::array<double, 2>> amps;
      for (const auto& a : phi.amplitudes()) amps.push_back({a.real(), a.imag()});
      r.fiducial = std::move(amps);
      r.passed = sic_overlaps(phi, sic_threshold).pass;
    } catch (const std::invalid_argument&) {
      r.fiducial.reset();
    }
  }

  for (const auto& c : candidates) {
    r.candidates.push_back(
        {c.restart_index, c.trace3, c.sic_max_deviation, c.gradient_norm, c.iterations, c.converged});
  }
  r.duration_seconds = duration_seconds;
  return r;
}

json to_json(const RunReport& r) {
  json j;
  j["tool"] = r.tool;
  j["version"] = r.version;
  j["dim"] = r.dim;
  j["config"] = {{"restarts", r.config.restarts},
                 {"max_iterations", r.config.max_iterations},
                 {"gradient_tolerance", r.config.gradient_tolerance},
                 {"objective_tolerance", r.config.objective_tolerance},
                 {"seed", r.config.seed},
                 {"sic_threshold", r.config.sic_threshold}};
  j["best"] = {{"restart_index", r.best.restart_index},
               {"converged", r.best.converged},
               {"iterations", r.best.iterations},
               {"alpha", r.best.alpha},
               {"probabilities", r.best.probabilities},
               {"trace2", r.best.trace2},
               {"trace3", r.best.trace3},
               {"f_value", r.best.f_value},
               {"min_eigenvalue", r.best.min_eigenvalue},
               {"sic_max_deviation", r.best.sic_max_deviation},
               {"gradient_norm", r.best.gradient_norm}};
  if (r.fiducial) {
    json amps = json::array();
    for (const auto& a : *r.fiducial) amps.push_back({a[0], a[1]});
    j["fiducial"] = {{"dim", r.dim}, {"amplitudes", std::move(amps)}};
  } else {
    j["fiducial"] = nullptr;
  }
  j["passed"] = r.passed;
  json cands = json::array();
  for (const auto& c : r.candidates) {
    cands.push_back({{"restart_index", c.restart_index},
                     {"trace3", c.trace3},
                     {"sic_max_deviation", c.sic_max_deviation},
                     {"gradient_norm", c.gradient_norm},
                     {"iterations", c.iterations},
                     {"converged", c.converged}});
  }
  j["candidates"] = std::move(cands);
  j["duration_seconds"] = r.duration_seconds;
  return j;
}

RunReport run_report_from_json(const json& j) {
  try {
    RunReport r;
    r.tool = j.at("tool").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.dim = j.at("dim").get<int>();
    const json& c = j.at("config");
    r.config = {c.at("restarts").get<int>(),
                c.at("max_iterations").get<int>(),
                c.at("gradient_tolerance").get<double>(),
                c.at("objective_tolerance").get<double>(),
                c.at("seed").get<std::uint64_t>(),
                c.at("sic_threshold").get<double>()};
    const json& b = j.at("best");
    r.best = {b.at("restart_index").get<int>(),   b.at("converged").get<bool>(),
              b.at("iterations").get<int>(),      b.at("alpha").get<RealRows>(),
              b.at("probabilities").get<RealRows>(), b.at("trace2").get<double>(),
              b.at("trace3").get<double>(),       b.at("f_value").get<double>(),
              b.at("min_eigenvalue").get<double>(), b.at("sic_max_deviation").get<double>(),
              b.at("gradient_norm").get<double>()};
    const json& f = j.at("fiducial");
    if (!f.is_null()) {
      std::vector<std::array<double, 2>> amps;
      for (const auto& a : f.at("amplitudes")) amps.push_back(a.get<std::array<double, 2>>());
      r.fiducial = std::move(amps);
    }
    r.passed = j.at("passed").get<bool>();
    for (const auto& e : j.at("candidates")) {
      r.candidates.push_back({e.at("restart_index").get<int>(), e.at("trace3").get<double>(),
                              e.at("sic_max_deviation").get<double>(),
                              e.at("gradient_norm").get<double>(), e.at("iterations").get<int>(),
                              e.at("converged").get<bool>()});
    }
    r.duration_seconds = j.at("duration_seconds").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed run report: ") + e.what());
  }
}

}  // namespace sicfid::cli
