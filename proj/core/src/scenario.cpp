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


#include "isogame/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <exception>
#include <numeric>
#include <string>
#include <thread>
#include <utility>

#include "isogame/errors.hpp"
#include "isogame/random.hpp"
#include "isogame/sustainability.hpp"

namespace isogame {

namespace {

double sample_std_error(std::span<const double> xs, double mean) {
  if (xs.size() < 2) return 0.0;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double var = ss / static_cast<double>(xs.size() - 1);
  return std::sqrt(var / static_cast<double>(xs.size()));
}

double ordered_mean(std::span<const double> xs) {
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

}  // namespace

void validate_config(const ScenarioConfig& c) {
  const auto fail = [](const std::string& key, const std::string& why) {
    throw ParameterError(key + ": " + why);
  };
  if (c.n < 1) fail("n", "population must be >= 1");
  if (!(c.area_side > 0.0) || !std::isfinite(c.area_side)) {
    fail("area_side_m", "must be finite and > 0");
  }
  if (!(c.isolation_fraction >= 0.0 && c.isolation_fraction <= 1.0)) {
    fail("isolation_fraction", "must lie in [0, 1]");
  }
  if (c.timesteps < 1) fail("timesteps", "must be >= 1");
  if (c.slot_minutes <= 0 || kMinutesPerDay % c.slot_minutes != 0) {
    fail("slot_minutes", "must divide 1440");
  }
  if (c.runs < 1) fail("runs", "must be >= 1");
  if (!(c.r0 >= 0.0) || !std::isfinite(c.r0)) fail("r0", "must be finite and >= 0");
  if (!(c.r_tilde_value >= 0.0) || !std::isfinite(c.r_tilde_value)) {
    fail("r_tilde_value", "must be finite and >= 0");
  }
  try {
    validate_params(c.params);
  } catch (const ParameterError& e) {
    fail("params", e.what());
  }
  try {
    validate_rule(c.rule, c.n);
  } catch (const ParameterError& e) {
    fail(c.rule.mode == ProximityRule::Mode::kFixedCount ? "proximity_c"
                                                         : "proximity_radius_m",
         e.what());
  }
  try {
    validate_bounds(c.bounds);
  } catch (const ParameterError& e) {
    fail("bounds", e.what());
  }
}

std::size_t home_count(std::size_t n, double fraction) {
  const double v = fraction * static_cast<double>(n);
  // Absorb representation error such as 0.3 * 10 = 3.0000000000000004.
  const double k = std::ceil(v - 1e-9 * std::max(1.0, v));
  if (k <= 0.0) return 0;
  return std::min(n, static_cast<std::size_t>(k));
}

Scenario generate_scenario(const ScenarioConfig& config,
                           std::uint64_t run_index) {
  validate_config(config);
  const std::uint64_t seed = derive_seed(config.seed, run_index);
  Rng rng(seed);
  const std::size_t n = config.n;
  const double side = config.area_side;

  std::vector<Position> homes(n);
  for (Position& h : homes) {
    h.x = rng.uniform(0.0, side);
    h.y = rng.uniform(0.0, side);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng.shuffle(std::span<std::size_t>(order));
  std::vector<Strategy> strategies(n, Strategy::kMove);
  const std::size_t stay = home_count(n, config.isolation_fraction);
  for (std::size_t k = 0; k < stay; ++k) strategies[order[k]] = Strategy::kHome;

  std::vector<MobilityTrace> traces;
  traces.reserve(n);
  std::vector<Position> positions(n);
  for (std::size_t i = 0; i < n; ++i) {
    MobilityTrace trace{homes[i], std::vector<Position>(config.timesteps)};
    for (Position& p : trace.steps) {
      p.x = rng.uniform(0.0, side);
      p.y = rng.uniform(0.0, side);
    }
    if (strategies[i] == Strategy::kHome) {
      trace = MobilityTrace::stay_home(homes[i], config.timesteps);
    }
    positions[i] = trace.final_position();
    traces.push_back(std::move(trace));
  }

  return Scenario{PopulationSnapshot(std::move(positions), std::move(homes)),
                  std::move(traces), std::move(strategies), seed};
}

std::vector<PlayerState> player_states(const ScenarioConfig& config,
                                       const Scenario& scenario,
                                       std::size_t* clipped) {
  const auto proximity = proximity_sets(scenario.snapshot, config.rule);
  const double cap = kDeviationClip * config.params.z;
  std::vector<PlayerState> states(scenario.snapshot.size());
  std::size_t clip_events = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    PlayerState& st = states[i];
    st.delta = total_deviation(scenario.traces[i]);
    if (st.delta > cap) {
      st.delta = cap;
      ++clip_events;
    }
    st.d_move = aggregate_distance(i, scenario.snapshot, proximity[i]);
    st.d_home = aggregate_distance_from(scenario.snapshot.home(i),
                                        scenario.snapshot, proximity[i]);
  }
  if (clipped) *clipped = clip_events;
  return states;
}

RunResult run_once(const ScenarioConfig& config, const Scenario& scenario) {
  const PopulationSnapshot& snap = scenario.snapshot;
  if (scenario.traces.size() != snap.size() ||
      scenario.strategies.size() != snap.size()) {
    throw ParameterError("scenario traces/strategies do not match population");
  }
  validate_rule(config.rule, snap.size());
  const auto proximity = proximity_sets(snap, config.rule);
  const double cap = kDeviationClip * config.params.z;

  RunResult r;
  r.seed = scenario.seed;
  r.payoffs.resize(snap.size());
  for (std::size_t i = 0; i < snap.size(); ++i) {
    PlayerState st;
    const double d = aggregate_distance(i, snap, proximity[i]);
    st.d_move = d;
    st.d_home = d;
    if (scenario.strategies[i] == Strategy::kHome) {
      ++r.home_count;
    } else {
      st.delta = total_deviation(scenario.traces[i]);
      if (st.delta > cap) {
        st.delta = cap;
        ++r.clipped;
      }
    }
    r.payoffs[i] = individual_payoff(scenario.strategies[i], st, config.params);
    r.total += r.payoffs[i];
  }
  r.mean_individual = r.total / static_cast<double>(snap.size());
  r.feasibility = check_constraints(snap, scenario.traces, config.bounds,
                                    config.params.omega, proximity);
  return r;
}

double EcdfCurve::operator()(double x) const {
  const auto it = std::upper_bound(values.begin(), values.end(), x);
  if (it == values.begin()) return 0.0;
  return probabilities[static_cast<std::size_t>(it - values.begin()) - 1];
}

EcdfCurve ecdf(std::span<const double> samples) {
  if (samples.empty()) throw ParameterError("ecdf needs at least one sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  EcdfCurve curve;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (k + 1 < sorted.size() && sorted[k + 1] == sorted[k]) continue;
    curve.values.push_back(sorted[k]);
    curve.probabilities.push_back(static_cast<double>(k + 1) / n);
  }
  return curve;
}

MonteCarloResult monte_carlo(const ScenarioConfig& config,
                             const MonteCarloOptions& options) {
  validate_config(config);
  const std::size_t runs = config.runs;
  std::vector<RunResult> results(runs);
  std::vector<std::exception_ptr> errors(runs);

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, runs));

  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t k = next++; k < runs; k = next++) {
      try {
        results[k] = run_once(config, generate_scenario(config, k));
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  MonteCarloResult mc;
  mc.totals.reserve(runs);
  mc.individual_means.reserve(runs);
  for (const RunResult& r : results) {
    mc.totals.push_back(r.total);
    mc.individual_means.push_back(r.mean_individual);
    mc.clipped += r.clipped;
    if (!r.feasibility.feasible()) ++mc.infeasible_runs;
  }
  mc.mean_total = ordered_mean(mc.totals);
  mc.std_error_total = sample_std_error(mc.totals, mc.mean_total);
  mc.mean_individual = ordered_mean(mc.individual_means);
  mc.std_error_individual =
      sample_std_error(mc.individual_means, mc.mean_individual);
  mc.totals_ecdf = ecdf(mc.totals);
  if (options.keep_runs) mc.runs = std::move(results);
  return mc;
}

FigureId parse_figure_id(std::string_view id) {
  std::string up(id);
  for (char& ch : up) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (up == "F2") return FigureId::kF2;
  if (up == "F3") return FigureId::kF3;
  if (up == "F4") return FigureId::kF4;
  if (up == "F5") return FigureId::kF5;
  if (up == "F6") return FigureId::kF6;
  if (up == "F7") return FigureId::kF7;
  throw ParameterError("unknown figure id '" + std::string(id) +
                       "' (expected F2..F7)");
}

std::string to_string(FigureId id) {
  return "F" + std::to_string(static_cast<int>(id) + 2);
}

double daily_payout(const ScenarioConfig& config, double mean_slot_total) {
  ResourcePolicy policy;
  policy.slot_minutes = config.slot_minutes;
  return static_cast<double>(policy.slots_per_day()) * mean_slot_total;
}

double daily_collection(const ScenarioConfig& config, double u_tilde) {
  return config.r_tilde_mode == ScenarioConfig::CollectionMode::kFraction
             ? config.r_tilde_value * u_tilde
             : config.r_tilde_value;
}

namespace {

MonteCarloResult experiment(ScenarioConfig config, std::size_t n,
                            double fraction, unsigned threads) {
  config.n = n;
  config.isolation_fraction = fraction;
  return monte_carlo(config, {threads, false});
}

Dataset omega_sweep(const ScenarioConfig& base, const FigureOptions& opt) {
  Dataset d{"figure_F2",
            {"omega", "n", "mean_total_home", "mean_total_random",
             "difference"},
            {}};
  const double alpha_raw = base.params.alpha_raw.value_or(base.params.alpha);
  const double beta_raw = base.params.beta_raw.value_or(base.params.beta);
  for (const std::size_t n : opt.omega_populations) {
    for (const double omega : opt.omegas) {
      ScenarioConfig cfg = base;
      cfg.params = PayoffParams::weighted(alpha_raw, beta_raw, omega,
                                          base.params.z, base.params.log_base);
      const double home = experiment(cfg, n, 1.0, opt.threads).mean_total;
      const double random = experiment(cfg, n, 0.0, opt.threads).mean_total;
      d.rows.push_back({omega, static_cast<double>(n), home, random,
                        home - random});
    }
  }
  return d;
}

}  // namespace

Dataset reproduce_figure(FigureId id, const ScenarioConfig& base,
                         const FigureOptions& opt) {
  validate_config(base);
  if (id == FigureId::kF2) return omega_sweep(base, opt);

  Dataset d;
  d.name = "figure_" + to_string(id);
  switch (id) {
    case FigureId::kF3:
      d.columns = {"n", "isolation_fraction", "total_incentive", "probability"};
      break;
    case FigureId::kF4:
      d.columns = {"n", "isolation_fraction", "mean_total", "std_error"};
      break;
    case FigureId::kF5:
      d.columns = {"n", "isolation_fraction", "mean_individual", "std_error"};
      break;
    case FigureId::kF6:
      d.columns = {"n",  "isolation_fraction", "u_tilde", "r_tilde",
                   "r0", "max_days",           "whole_days"};
      break;
    case FigureId::kF7:
      d.columns = {"n",       "isolation_fraction", "r0", "r_tilde_fraction",
                   "u_tilde", "r_tilde",            "max_days"};
      break;
    case FigureId::kF2:
      break;
  }

  if (id == FigureId::kF7) {
    const std::size_t n = opt.sustain_population;
    const double f = base.isolation_fraction;
    const MonteCarloResult mc = experiment(base, n, f, opt.threads);
    const double u = daily_payout(base, mc.mean_total);
    for (const double r0 : opt.r0_values) {
      for (const double frac : opt.r_tilde_fractions) {
        const double r = frac * u;
        d.rows.push_back({static_cast<double>(n), f, r0, frac, u, r,
                          max_lockdown_days(r0, u, r).days});
      }
    }
    return d;
  }

  for (const std::size_t n : opt.populations) {
    for (const double f : opt.fractions) {
      const MonteCarloResult mc = experiment(base, n, f, opt.threads);
      const auto nd = static_cast<double>(n);
      switch (id) {
        case FigureId::kF3:
          for (std::size_t k = 0; k < mc.totals_ecdf.values.size(); ++k) {
            d.rows.push_back({nd, f, mc.totals_ecdf.values[k],
                              mc.totals_ecdf.probabilities[k]});
          }
          break;
        case FigureId::kF4:
          d.rows.push_back({nd, f, mc.mean_total, mc.std_error_total});
          break;
        case FigureId::kF5:
          d.rows.push_back({nd, f, mc.mean_individual, mc.std_error_individual});
          break;
        case FigureId::kF6: {
          const double u = daily_payout(base, mc.mean_total);
          const double r = daily_collection(base, u);
          const LockdownHorizon h = max_lockdown_days(base.r0, u, r);
          d.rows.push_back({nd, f, u, r, base.r0, h.days,
                            static_cast<double>(h.whole_days)});
          break;
        }
        default:
          break;
      }
    }
  }
  return d;
}

}  // namespace isogame
