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

#include "sicfid/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>

#include <Eigen/Eigenvalues>

#include "sicfid/verify.hpp"

namespace sicfid {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kArmijo = 1e-4;
constexpr int kMaxBacktracks = 60;
// Relative cutoff below which Hessian directions are treated as flat.
constexpr double kCurvatureFloor = 1e-12;

struct Evaluation {
  double value = 0.0;
  Eigen::VectorXd grad;  // flat, PhaseVector::flat layout
};

// Tr rho^3 and its gradient from a single rho^2.
Evaluation evaluate(const MubSystem& mub, const PhaseVector& phases) {
  const int d = mub.dim().value();
  const int half = phases.half();
  const ComplexOperator rho = rho_from_phases(mub, phases);
  const ComplexOperator rho2 = rho * rho;

  Evaluation out;
  out.value = rho2.cwiseProduct(rho.transpose()).sum().real();
  out.grad.resize(phases.size());

  // d rho / d alpha(j,r) = -s sum_k sin(alpha(j,r) + 2 pi k r / d) Pi(j,k)
  const double s = 2.0 / (d * std::sqrt(d + 1.0));
  std::vector<double> weight(static_cast<size_t>(d));
  for (int j = 0; j <= d; ++j) {
    for (int k = 0; k < d; ++k) {
      weight[static_cast<size_t>(k)] =
          rho2.cwiseProduct(mub.projector(j, k).transpose()).sum().real();
    }
    for (int r = 1; r <= half; ++r) {
      double g = 0.0;
      for (int k = 0; k < d; ++k) {
        const double shift = kTwoPi * static_cast<double>((k * r) % d) / d;
        g += std::sin(phases.angle(j, r) + shift) * weight[static_cast<size_t>(k)];
      }
      out.grad(j * half + (r - 1)) = -3.0 * s * g;
    }
  }
  return out;
}

PhaseVector to_phases(const MubSystem& mub, const Eigen::VectorXd& x);

Evaluation evaluate_flat(const MubSystem& mub, const Eigen::VectorXd& x) {
  return evaluate(mub, to_phases(mub, x));
}

PhaseVector to_phases(const MubSystem& mub, const Eigen::VectorXd& x) {
  return PhaseVector::from_flat(mub.dim(), {x.data(), static_cast<size_t>(x.size())});
}

// Hessian of Tr rho^3 in the flat layout:
//   6 Re Tr(rho d_a rho d_b rho) + 3 Tr(rho^2 d_aa rho) on the diagonal.
Eigen::MatrixXd hessian_flat(const MubSystem& mub, const Eigen::VectorXd& x) {
  const PhaseVector phases = to_phases(mub, x);
  const int d = mub.dim().value();
  const int half = phases.half();
  const int n = phases.size();
  const double s = 2.0 / (d * std::sqrt(d + 1.0));
  const ComplexOperator rho = rho_from_phases(mub, phases);
  const ComplexOperator rho2 = rho * rho;

  std::vector<ComplexOperator> first(static_cast<size_t>(n));
  Eigen::VectorXd diag(n);
  for (int j = 0; j <= d; ++j) {
    for (int r = 1; r <= half; ++r) {
      ComplexOperator da = ComplexOperator::Zero(d, d);
      ComplexOperator daa = ComplexOperator::Zero(d, d);
      for (int k = 0; k < d; ++k) {
        const double arg = phases.angle(j, r) + kTwoPi * static_cast<double>((k * r) % d) / d;
        da -= s * std::sin(arg) * mub.projector(j, k);
        daa -= s * std::cos(arg) * mub.projector(j, k);
      }
      const int a = j * half + (r - 1);
      diag(a) = 3.0 * rho2.cwiseProduct(daa.transpose()).sum().real();
      first[static_cast<size_t>(a)] = std::move(da);
    }
  }
  Eigen::MatrixXd hess(n, n);
  for (int a = 0; a < n; ++a) {
    const ComplexOperator left = rho * first[static_cast<size_t>(a)];
    for (int b = a; b < n; ++b) {
      hess(a, b) = 6.0 * left.cwiseProduct(first[static_cast<size_t>(b)].transpose()).sum().real();
      hess(b, a) = hess(a, b);
    }
    hess(a, a) += diag(a);
  }
  return hess;
}

bool better(const FiducialCandidate& a, const FiducialCandidate& b) {
  if (a.trace3 != b.trace3) return a.trace3 > b.trace3;
  if (a.sic_max_deviation != b.sic_max_deviation) {
    return a.sic_max_deviation < b.sic_max_deviation;
  }
  return a.restart_index < b.restart_index;
}

}  // namespace

void SearchConfig::validate() const {
  if (!dim.is_odd()) throw std::invalid_argument("dimension must be an odd prime");
  if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
  if (!(gradient_tolerance > 0.0) || !(objective_tolerance > 0.0)) {
    throw std::invalid_argument("tolerances must be positive");
  }
}

double objective(const MubSystem& mub, const PhaseVector& phases) {
  const ComplexOperator rho = rho_from_phases(mub, phases);
  return (rho * rho).cwiseProduct(rho.transpose()).sum().real();
}

Eigen::MatrixXd gradient(const MubSystem& mub, const PhaseVector& phases) {
  const Evaluation e = evaluate(mub, phases);
  Eigen::MatrixXd out(phases.families(), phases.half());
  for (int j = 0; j < phases.families(); ++j) {
    for (int r = 0; r < phases.half(); ++r) out(j, r) = e.grad(j * phases.half() + r);
  }
  return out;
}

FiducialCandidate evaluate_candidate(const MubSystem& mub, const PhaseVector& phases,
                                     const TripleProductTable* table) {
  const int d = mub.dim().value();
  const ProbabilityTable probs = probabilities_from_phases(phases);
  const ComplexOperator rho = rho_from_probabilities(mub, probs);
  const ComplexOperator rho2 = rho * rho;

  FiducialCandidate c{phases};
  const double trace1 = rho.trace().real();
  c.trace2 = rho2.trace().real();
  c.trace3 = rho2.cwiseProduct(rho.transpose()).sum().real();
  c.f_value = table ? f_functional(*table, probs) : c.trace3 + 3.0 * c.trace2 + 3.0 * trace1 + d;

  Eigen::SelfAdjointEigenSolver<ComplexOperator> solver(0.5 * (rho + rho.adjoint()));
  c.min_eigenvalue = solver.eigenvalues()(0);
  const StateVector top(mub.dim(), solver.eigenvectors().col(d - 1).normalized());
  c.sic_max_deviation = sic_overlaps(top).max_deviation;
  return c;
}

FiducialCandidate local_ascent(const MubSystem& mub, const PhaseVector& start,
                               const SearchConfig& config, const TripleProductTable* table,
                               const AscentObserver& observer) {
  if (start.dim() != mub.dim()) {
    throw std::invalid_argument("start phases do not match the MUB dimension");
  }
  const int n = start.size();
  const std::vector<double> flat = start.flat();
  Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(flat.data(), n);
  Evaluation cur = evaluate_flat(mub, x);
  // Inverse-Hessian estimate for minimizing -f.
  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n);

  if (observer) observer(0, cur.value);
  int iter = 0;
  auto accept = [&](Eigen::VectorXd step, Evaluation next) {
    ++iter;
    x += step;
    cur = std::move(next);
    if (observer) observer(iter, cur.value);
  };

  bool converged = false;
  while (iter < config.max_iterations) {
    if (cur.grad.norm() < config.gradient_tolerance) {
      converged = true;
      break;
    }

    std::optional<Evaluation> next;
    Eigen::VectorXd step;
    for (bool steepest : {false, true}) {
      if (steepest) h.setIdentity();
      const Eigen::VectorXd dir = h * cur.grad;
      const double slope = cur.grad.dot(dir);
      if (!(slope > 0.0)) continue;
      double t = 1.0;
      for (int b = 0; b < kMaxBacktracks; ++b, t *= 0.5) {
        Evaluation trial = evaluate_flat(mub, x + t * dir);
        if (trial.value >= cur.value + kArmijo * t * slope && trial.value > cur.value) {
          step = t * dir;
          next = std::move(trial);
          break;
        }
      }
      if (next) break;
    }
    if (!next) break;  // no ascent step resolvable in floating point

    const double gain = next->value - cur.value;
    // BFGS update with s = step, y = grad(-f)_new - grad(-f)_old.
    const Eigen::VectorXd y = cur.grad - next->grad;
    const double sy = step.dot(y);
    if (sy > 1e-12 * step.norm() * y.norm()) {
      const double rho_k = 1.0 / sy;
      const Eigen::VectorXd hy = h * y;
      h += (rho_k * rho_k * y.dot(hy) + rho_k) * (step * step.transpose()) -
           rho_k * (hy * step.transpose() + step * hy.transpose());
    }
    accept(std::move(step), std::move(*next));

    if (gain < config.objective_tolerance) {
      converged = true;
      break;
    }
  }

  // Near a maximum the per-step gain drops below the rounding of the
  // objective long before the gradient vanishes, and some maxima are flat to
  // second order. Finish with Newton steps, kept while the gradient shrinks
  // and the objective does not drop.
  if (converged) {
    while (iter < config.max_iterations && cur.grad.norm() >= config.gradient_tolerance) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(-hessian_flat(mub, x));
      const Eigen::VectorXd& lam = eig.eigenvalues();
      const double floor = kCurvatureFloor * std::max(lam.cwiseAbs().maxCoeff(), 1.0);
      const Eigen::VectorXd coef = eig.eigenvectors().transpose() * cur.grad;
      Eigen::VectorXd dir = Eigen::VectorXd::Zero(n);
      for (int i = 0; i < n; ++i) {
        if (lam(i) > floor) dir += (coef(i) / lam(i)) * eig.eigenvectors().col(i);
      }

      const double gnorm = cur.grad.norm();
      bool moved = false;
      double t = 1.0;
      for (int b = 0; b < kMaxBacktracks && !moved; ++b, t *= 0.5) {
        Evaluation trial = evaluate_flat(mub, x + t * dir);
        if (trial.value >= cur.value && trial.grad.norm() < gnorm) {
          accept(t * dir, std::move(trial));
          moved = true;
        }
      }
      if (!moved) break;
    }
  }

  FiducialCandidate out = evaluate_candidate(mub, to_phases(mub, x), table);
  out.gradient_norm = cur.grad.norm();
  out.iterations = iter;
  out.converged = converged || out.gradient_norm < config.gradient_tolerance;
  return out;
}

PhaseVector starting_point(const SearchConfig& config, int restart_index) {
  PhaseVector phases(config.dim);
  const auto seed = config.rng_seed;
  const auto index = static_cast<std::uint64_t>(restart_index);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 gen(seq);
  for (int j = 0; j < phases.families(); ++j) {
    for (int r = 1; r <= phases.half(); ++r) {
      // Top 53 bits as a uniform double in [0, 1).
      const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
      phases.set_angle(j, r, kTwoPi * u);
    }
  }
  return phases;
}

std::vector<FiducialCandidate> multi_start(const MubSystem& mub, const SearchConfig& config,
                                           unsigned threads) {
  config.validate();
  if (config.dim != mub.dim()) {
    throw std::invalid_argument("search config does not match the MUB dimension");
  }
  std::optional<TripleProductTable> table;
  if (mub.dim().value() <= TripleProductTable::kDefaultMaxDim) table = triple_products(mub);
  const TripleProductTable* table_ptr = table ? &*table : nullptr;

  std::vector<std::optional<FiducialCandidate>> slots(static_cast<size_t>(config.restarts));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (int i = next++; i < config.restarts; i = next++) {
      try {
        FiducialCandidate c = local_ascent(mub, starting_point(config, i), config, table_ptr);
        c.restart_index = i;
        slots[static_cast<size_t>(i)] = std::move(c);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(config.restarts));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<FiducialCandidate> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  std::sort(out.begin(), out.end(), better);
  return out;
}

}  // namespace sicfid
