// Copyright 2026 The isogame Authors
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


#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "isogame/game.hpp"
#include "isogame/geometry.hpp"
#include "isogame/random.hpp"
#include "isogame/scenario.hpp"

namespace {

using namespace isogame;

PopulationSnapshot random_snapshot(std::size_t n) {
  Rng rng(7);
  std::vector<Position> pts(n);
  for (Position& p : pts) p = {rng.uniform(0, 1000), rng.uniform(0, 1000)};
  return PopulationSnapshot(pts, pts);
}

// Every proximity set by the per-individual linear scan.
void BM_ProximityScan(benchmark::State& state) {
  const auto snap = random_snapshot(static_cast<std::size_t>(state.range(0)));
  const auto rule = ProximityRule::nearest(10);
  for (auto _ : state) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < snap.size(); ++i) {
      total += proximity_set(i, snap, rule).size();
    }
    benchmark::DoNotOptimize(total);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProximityScan)->Arg(500)->Arg(1000)->Arg(2000)->Complexity();

void BM_ProximityGrid(benchmark::State& state) {
  const auto snap = random_snapshot(static_cast<std::size_t>(state.range(0)));
  const auto rule = ProximityRule::nearest(10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(proximity_sets(snap, rule));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProximityGrid)->Arg(500)->Arg(1000)->Arg(2000)->Complexity();

void BM_RunOnce(benchmark::State& state) {
  ScenarioConfig c;
  c.n = static_cast<std::size_t>(state.range(0));
  c.isolation_fraction = 0.5;
  const Scenario s = generate_scenario(c, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_once(c, s));
  }
}
BENCHMARK(BM_RunOnce)->Arg(500)->Arg(2000);

void BM_GenerateScenario(benchmark::State& state) {
  ScenarioConfig c;
  c.n = static_cast<std::size_t>(state.range(0));
  std::uint64_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_scenario(c, k++));
  }
}
BENCHMARK(BM_GenerateScenario)->Arg(500)->Arg(2000);

// Exhaustive dominance check over all 2^N opponent profiles.
void BM_DominanceEnumeration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(11);
  std::vector<PlayerState> players(n);
  for (PlayerState& p : players) {
    p.delta = rng.uniform(1, 500);
    p.d_move = rng.uniform(10, 1000);
    p.d_home = p.d_move + rng.uniform(1, 100);
  }
  const GameInstance g(players, PayoffParams{});
  for (auto _ : state) {
    benchmark::DoNotOptimize(dominant_strategy_equilibrium(g));
  }
}
BENCHMARK(BM_DominanceEnumeration)->DenseRange(4, 16, 4);

}  // namespace

BENCHMARK_MAIN();
