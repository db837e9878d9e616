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

#include <random>

#include <benchmark/benchmark.h>

#include "sicfid/sicfid.hpp"

namespace {

using namespace sicfid;

PhaseVector random_point(const PrimeDim& dim, std::uint64_t seed) {
  SearchConfig config{dim};
  config.rng_seed = seed;
  return starting_point(config, 0);
}

void BM_BuildMub(benchmark::State& state) {
  const PrimeDim dim(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_mub(dim));
}

void BM_Objective(benchmark::State& state) {
  const PrimeDim dim(static_cast<int>(state.range(0)));
  const MubSystem mub = build_mub(dim);
  const PhaseVector x = random_point(dim, 1);
  for (auto _ : state) benchmark::DoNotOptimize(objective(mub, x));
}

void BM_Gradient(benchmark::State& state) {
  const PrimeDim dim(static_cast<int>(state.range(0)));
  const MubSystem mub = build_mub(dim);
  const PhaseVector x = random_point(dim, 1);
  for (auto _ : state) benchmark::DoNotOptimize(gradient(mub, x));
}

void BM_LocalAscent(benchmark::State& state) {
  const PrimeDim dim(static_cast<int>(state.range(0)));
  const MubSystem mub = build_mub(dim);
  const SearchConfig config{dim};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(local_ascent(mub, random_point(dim, ++seed), config));
  }
}

void BM_SicOverlaps(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(d) / std::sqrt(static_cast<double>(d));
  const StateVector phi(PrimeDim(d), v);
  for (auto _ : state) benchmark::DoNotOptimize(sic_overlaps(phi));
}

BENCHMARK(BM_BuildMub)->Arg(3)->Arg(5)->Arg(7)->Arg(13);
BENCHMARK(BM_Objective)->Arg(3)->Arg(5)->Arg(7)->Arg(13);
BENCHMARK(BM_Gradient)->Arg(3)->Arg(5)->Arg(7)->Arg(13);
BENCHMARK(BM_LocalAscent)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SicOverlaps)->Arg(3)->Arg(7)->Arg(13);

}  // namespace

BENCHMARK_MAIN();
