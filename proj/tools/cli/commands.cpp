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

#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>

#include "report.hpp"
#include "sicfid/io.hpp"
#include "sicfid/search.hpp"
#include "sicfid/version.hpp"

namespace sicfid::cli {

using nlohmann::json;

namespace {

struct SearchFlags {
  int dim = 0;
  int restarts = 100;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  int max_iter = 10000;
  double threshold = kDefaultSicThreshold;
  std::string out;
};

struct VerifyFlags {
  int dim = 0;
  std::string vector;
  double threshold = kDefaultSicThreshold;
};

struct AnalyzeFlags {
  int dim = 0;
  std::string phases;
};

int cmd_search(const SearchFlags& f, std::ostream& out, std::ostream& err) {
  if (!is_prime(f.dim) || f.dim % 2 == 0) {
    err << "error: dimension must be an odd prime (got " << f.dim << ")\n";
    return kExitUsage;
  }
  SearchConfig config{PrimeDim(f.dim)};
  config.restarts = f.restarts;
  config.max_iterations = f.max_iter;
  config.gradient_tolerance = f.tol;
  config.rng_seed = f.seed;
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  const MubSystem mub = build_mub(config.dim);
  const auto candidates = multi_start(mub, config, thread_count_from_env());
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const RunReport report = make_run_report(config, mub, candidates, f.threshold, seconds);
  const json doc = to_json(report);
  if (f.out.empty()) {
    out << dump_json(doc);
  } else {
    try {
      write_json_file(f.out, doc);
    } catch (const std::runtime_error& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    out << std::setprecision(17) << "d=" << f.dim << " best trace3=" << report.best.trace3
        << "  sic_max_deviation=" << report.best.sic_max_deviation
        << (report.passed ? "  PASS" : "  FAIL") << "\n";
  }
  return report.passed ? kExitOk : kExitFailed;
}

int cmd_verify(const VerifyFlags& f, std::ostream& out, std::ostream& err) {
  if (!is_prime(f.dim)) {
    err << "error: dimension must be prime (got " << f.dim << ")\n";
    return kExitUsage;
  }
  StateVector phi = [&] {
    try {
      return state_vector_from_json(read_json_file(f.vector));
    } catch (const FormatError& e) {
      err << "error: " << f.vector << ": " << e.what() << "\n";
      throw;
    }
  }();
  if (phi.dim().value() != f.dim) {
    err << "error: vector dimension " << phi.dim().value() << " does not match --dim " << f.dim
        << "\n";
    return kExitUsage;
  }
  const SicReport rep = sic_overlaps(phi, f.threshold);
  json overlaps = json::array();
  for (const auto& p : all_indices(rep.dim)) {
    overlaps.push_back({{"p", {p.p1, p.p2}}, {"value", rep.overlaps[static_cast<size_t>(p.flat(rep.dim))]}});
  }
  const json doc = {{"dim", f.dim},
                    {"target", 1.0 / (f.dim + 1)},
                    {"overlaps", std::move(overlaps)},
                    {"max_deviation", rep.max_deviation},
                    {"threshold", rep.threshold},
                    {"pass", rep.pass}};
  out << dump_json(doc);
  return rep.pass ? kExitOk : kExitFailed;
}

int cmd_analyze(const AnalyzeFlags& f, std::ostream& out, std::ostream& err) {
  if (!is_prime(f.dim) || f.dim % 2 == 0) {
    err << "error: dimension must be an odd prime (got " << f.dim << ")\n";
    return kExitUsage;
  }
  PhaseVector phases = [&] {
    try {
      return phase_vector_from_json(read_json_file(f.phases));
    } catch (const FormatError& e) {
      err << "error: " << f.phases << ": " << e.what() << "\n";
      throw;
    }
  }();
  if (phases.dim().value() != f.dim) {
    err << "error: phase table dimension " << phases.dim().value() << " does not match --dim "
        << f.dim << "\n";
    return kExitUsage;
  }

  const PrimeDim& dim = phases.dim();
  const int d = dim.value();
  const MubSystem mub = build_mub(dim);
  const ProbabilityTable probs = probabilities_from_phases(phases);
  const ComplexOperator rho = rho_from_probabilities(mub, probs);
  const ComplexOperator rho2 = rho * rho;
  Eigen::SelfAdjointEigenSolver<ComplexOperator> eig(0.5 * (rho + rho.adjoint()));
  const Eigen::MatrixXd margins = positivity_margin(phases);
  const ApplebyReport appleby = appleby_conditions(probs);
  const double bound = probability_upper_bound(dim);

  json doc;
  doc["dim"] = d;
  doc["probabilities"] = matrix_to_json(probs.p);
  doc["trace1"] = rho.trace().real();
  doc["trace2"] = rho2.trace().real();
  doc["trace3"] = rho2.cwiseProduct(rho.transpose()).sum().real();
  doc["purity_from_probabilities"] = purity_from_probabilities(probs);
  doc["min_eigenvalue"] = eig.eigenvalues()(0);
  doc["positivity_margins"] = matrix_to_json(margins);
  doc["min_positivity_margin"] = margins.minCoeff();
  doc["renyi_total"] = renyi_total(probs);
  doc["renyi_expected"] = (d + 1) * std::log2((d + 1) / 2.0);
  doc["appleby"] = {{"sum_squares", matrix_to_json(appleby.sum_squares)},
                    {"shifted", matrix_to_json(appleby.shifted)},
                    {"max_abs", appleby.max_abs()}};
  doc["probability_bound"] = bound;
  doc["max_probability"] = probs.p.maxCoeff();
  doc["bound_slack"] = bound - probs.p.maxCoeff();
  out << dump_json(doc);
  return kExitOk;
}

}  // namespace

unsigned thread_count_from_env() {
  if (const char* v = std::getenv(kThreadsEnv)) {
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"sicfid: Weyl-Heisenberg SIC fiducial search and certification"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  SearchFlags sf;
  auto* search = app.add_subcommand("search", "Multi-start maximization of Tr rho^3");
  search->add_option("--dim", sf.dim, "Odd prime dimension")->required();
  search->add_option("--restarts", sf.restarts, "Number of random starting points")
      ->capture_default_str();
  search->add_option("--seed", sf.seed, "64-bit RNG seed")->capture_default_str();
  search->add_option("--tol", sf.tol, "Gradient-norm tolerance")->capture_default_str();
  search->add_option("--max-iter", sf.max_iter, "Iteration cap per restart")
      ->capture_default_str();
  search->add_option("--threshold", sf.threshold, "SIC overlap deviation threshold")
      ->capture_default_str();
  search->add_option("--out", sf.out, "Report path (stdout when omitted)");

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "SIC overlap test of a state vector");
  verify->add_option("--dim", vf.dim, "Prime dimension")->required();
  verify->add_option("--vector", vf.vector, "State vector JSON")->required();
  verify->add_option("--threshold", vf.threshold, "Overlap deviation threshold")
      ->capture_default_str();

  AnalyzeFlags af;
  auto* analyze = app.add_subcommand("analyze", "Diagnostics of a phase table");
  analyze->add_option("--dim", af.dim, "Odd prime dimension")->required();
  analyze->add_option("--phases", af.phases, "Phase table JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (search->parsed()) return cmd_search(sf, out, err);
    if (verify->parsed()) return cmd_verify(vf, out, err);
    if (analyze->parsed()) return cmd_analyze(af, out, err);
  } catch (const FormatError&) {
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sicfid::cli
