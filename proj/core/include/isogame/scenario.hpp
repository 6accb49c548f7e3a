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


#ifndef ISOGAME_SCENARIO_HPP_
#define ISOGAME_SCENARIO_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isogame/dataset.hpp"
#include "isogame/game.hpp"
#include "isogame/geometry.hpp"
#include "isogame/objective.hpp"

namespace isogame {

// One Monte Carlo experiment. Defaults: 500
// people in a 1 km square, alpha = 3, beta = 1, Z = 1400, 50 runs.
struct ScenarioConfig {
  enum class CollectionMode { kFraction, kAbsolute };

  std::size_t n = 500;
  double area_side = 1000.0;  // meters
  double isolation_fraction = 1.0;
  std::size_t timesteps = 6;
  int slot_minutes = 30;
  PayoffParams params;
  ProximityRule rule;
  ConstraintBounds bounds;
  std::size_t runs = 50;
  std::uint64_t seed = 1;
  double r0 = 5e23;
  CollectionMode r_tilde_mode = CollectionMode::kFraction;
  double r_tilde_value = 0.10;

  friend bool operator==(const ScenarioConfig&,
                         const ScenarioConfig&) = default;
};

// Movers' deviations are clipped to this fraction of Z before payoffs.
inline constexpr double kDeviationClip = 0.99;

// Throws ParameterError naming the offending field.
void validate_config(const ScenarioConfig& config);

// Number of individuals assigned Home: ceil(fraction * n).
std::size_t home_count(std::size_t n, double fraction);

struct Scenario {
  PopulationSnapshot snapshot;
  std::vector<MobilityTrace> traces;
  std::vector<Strategy> strategies;
  std::uint64_t seed = 0;
};

// Homes uniform over the area; after a seeded shuffle the first
// home_count() individuals stay home and the rest take T uniform random
// positions. Draw order is fixed (homes, shuffle, steps for everyone) so
// the same seed gives the same geography at every isolation fraction.
Scenario generate_scenario(const ScenarioConfig& config,
                           std::uint64_t run_index);

struct RunResult {
  std::vector<double> payoffs;
  double total = 0.0;  // payoffs summed in index order
  double mean_individual = 0.0;
  FeasibilityReport feasibility;
  std::uint64_t seed = 0;
  std::size_t home_count = 0;
  std::size_t clipped = 0;  // movers whose deviation hit the clip
};

// Payoff inputs per individual: delta (clipped for payoffs), distance from
// the end position, and distance from home, all against the same
// end-of-period proximity sets.
std::vector<PlayerState> player_states(const ScenarioConfig& config,
                                       const Scenario& scenario,
                                       std::size_t* clipped = nullptr);

RunResult run_once(const ScenarioConfig& config, const Scenario& scenario);

// Right-continuous empirical CDF: probabilities[k] = P(X <= values[k]).
struct EcdfCurve {
  std::vector<double> values;  // distinct, ascending
  std::vector<double> probabilities;

  double operator()(double x) const;
};

EcdfCurve ecdf(std::span<const double> samples);

struct MonteCarloOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  bool keep_runs = true;
};

struct MonteCarloResult {
  std::vector<RunResult> runs;  // empty unless keep_runs
  std::vector<double> totals;   // one per run, in run order
  std::vector<double> individual_means;
  double mean_total = 0.0;
  double std_error_total = 0.0;
  double mean_individual = 0.0;
  double std_error_individual = 0.0;
  std::size_t clipped = 0;
  std::size_t infeasible_runs = 0;
  EcdfCurve totals_ecdf;
};

// Independent runs seeded from (config.seed, run index). Output does not
// depend on the thread count.
MonteCarloResult monte_carlo(const ScenarioConfig& config,
                             const MonteCarloOptions& options = {});

enum class FigureId { kF2, kF3, kF4, kF5, kF6, kF7 };

// Accepts "F2".."F7" (case-insensitive). Throws ParameterError otherwise.
FigureId parse_figure_id(std::string_view id);
std::string to_string(FigureId id);

struct FigureOptions {
  std::vector<std::size_t> populations{500, 1000, 1500, 2000};
  std::vector<double> fractions{0.25, 0.5, 0.75, 1.0};
  std::vector<double> omegas{0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                             0.6, 0.7, 0.8, 0.9, 1.0};
  std::vector<std::size_t> omega_populations{500, 1000};
  std::vector<double> r0_values{5e23, 5.5e23, 6e23, 6.5e23, 7e23};
  std::vector<double> r_tilde_fractions{0.10, 0.20, 0.30, 0.40, 0.50};
  std::size_t sustain_population = 1000;
  unsigned threads = 0;
};

// Daily payout used for projections: slots per day times the mean slot
// (run) total.
double daily_payout(const ScenarioConfig& config, double mean_slot_total);

// Daily collection implied by the config for a given daily payout.
double daily_collection(const ScenarioConfig& config, double u_tilde);

// Data series for one plot id, computed from `base`
// with the figure's own axes swept.
Dataset reproduce_figure(FigureId id, const ScenarioConfig& base,
                         const FigureOptions& options = {});

}  // namespace isogame

#endif  // ISOGAME_SCENARIO_HPP_
