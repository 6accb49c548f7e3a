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


#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "isogame/config.hpp"
#include "isogame/dataset.hpp"
#include "isogame/errors.hpp"
#include "isogame/game.hpp"
#include "isogame/manifest.hpp"
#include "isogame/objective.hpp"
#include "isogame/random.hpp"
#include "isogame/scenario.hpp"
#include "isogame/sustainability.hpp"

namespace isogame::cli {

namespace {

// Options shared by every experiment-driven subcommand.
struct CommonOptions {
  std::string config_path;
  std::vector<std::string> sets;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> runs;
  unsigned threads = 0;
  std::string out_dir;
};

void add_common(CLI::App* app, CommonOptions& o, bool with_out) {
  app->add_option("-c,--config", o.config_path, "key = value config file");
  app->add_option("--set", o.sets, "override one config key (key=value)");
  app->add_option("--seed", o.seed, "master seed");
  app->add_option("--runs", o.runs, "Monte Carlo runs");
  app->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  if (with_out) app->add_option("-o,--out", o.out_dir, "output directory");
}

ScenarioConfig build_config(const CommonOptions& o) {
  ScenarioConfig c = o.config_path.empty() ? ScenarioConfig{}
                                           : load_config(o.config_path);
  for (const std::string& kv : o.sets) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("--set expects key=value, got '" + kv + "'", 0, kv);
    }
    apply_config_value(c, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (o.seed) c.seed = *o.seed;
  if (o.runs) c.runs = *o.runs;
  check_config(c);
  return c;
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParameterError(std::string(what) + ": cannot parse '" + item + "'");
    }
  }
  return out;
}

Position parse_position(const std::string& text) {
  const auto v = parse_list(text, "position");
  if (v.size() != 2) throw ParameterError("position needs x,y: '" + text + "'");
  return {v[0], v[1]};
}

LogBase parse_log_base(const std::string& s) {
  if (s == "natural" || s == "e") return LogBase::kNatural;
  if (s == "decimal" || s == "10") return LogBase::kDecimal;
  throw ParameterError("log base must be natural or decimal");
}

StepDirection parse_direction(const std::string& s) {
  if (s == "toward") return StepDirection::kToward;
  if (s == "away") return StepDirection::kAway;
  throw ParameterError("direction must be toward or away, got '" + s + "'");
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------

int run_simulate(const CommonOptions& common, std::ostream& out) {
  const ScenarioConfig config = build_config(common);
  const MonteCarloResult mc = monte_carlo(config, {common.threads, true});

  Dataset runs{"simulate_runs",
               {"run", "seed", "total", "mean_individual", "home_count",
                "clipped", "violations"},
               {}};
  for (std::size_t k = 0; k < mc.runs.size(); ++k) {
    const RunResult& r = mc.runs[k];
    runs.rows.push_back({static_cast<double>(k), static_cast<double>(r.seed),
                         r.total, r.mean_individual,
                         static_cast<double>(r.home_count),
                         static_cast<double>(r.clipped),
                         static_cast<double>(r.feasibility.violations.size())});
  }
  Dataset curve{"simulate_ecdf", {"total_incentive", "probability"}, {}};
  for (std::size_t k = 0; k < mc.totals_ecdf.values.size(); ++k) {
    curve.rows.push_back(
        {mc.totals_ecdf.values[k], mc.totals_ecdf.probabilities[k]});
  }

  out << "runs=" << config.runs << '\n'
      << "mean_total=" << format_number(mc.mean_total) << '\n'
      << "std_error_total=" << format_number(mc.std_error_total) << '\n'
      << "mean_individual=" << format_number(mc.mean_individual) << '\n'
      << "clipped_deviations=" << mc.clipped << '\n'
      << "infeasible_runs=" << mc.infeasible_runs << '\n';

  if (!common.out_dir.empty()) {
    RunManifest manifest{"simulate", config, {}};
    manifest.write_output(common.out_dir, "simulate_runs.csv", to_csv(runs));
    manifest.write_output(common.out_dir, "simulate_runs.json", to_json(runs));
    manifest.write_output(common.out_dir, "simulate_ecdf.csv", to_csv(curve));
    manifest.write_output(common.out_dir, "simulate_ecdf.json", to_json(curve));
    manifest.save(common.out_dir);
    out << "wrote " << common.out_dir << '\n';
  }
  return kExitOk;
}

struct GameCheckOptions {
  double alpha = 3.0;
  double beta = 1.0;
  double z = 1400.0;
  std::string log_base = "natural";
  std::vector<std::string> players;
  std::string two_player;
  std::vector<std::string> directions{"toward", "toward"};
  bool from_scenario = false;
  std::size_t max_players = EnumerationLimits{}.max_players;
  bool list_equilibria = false;
};

int run_game_check(const GameCheckOptions& g, const CommonOptions& common,
                   std::ostream& out) {
  PayoffParams params;
  params.alpha = g.alpha;
  params.beta = g.beta;
  params.z = g.z;
  params.log_base = parse_log_base(g.log_base);
  const EnumerationLimits limits{g.max_players};

  std::optional<GameInstance> game;
  if (!g.two_player.empty()) {
    const auto v = parse_list(g.two_player, "--two-player");
    if (v.size() != 3) throw ParameterError("--two-player needs d1,d2,step");
    if (g.directions.size() != 2) {
      throw ParameterError("--directions needs two values");
    }
    TwoPlayerStep step{v[2], {parse_direction(g.directions[0]),
                              parse_direction(g.directions[1])}};
    game = GameInstance::two_player(params, v[0], v[1], step);
  } else if (g.from_scenario) {
    const ScenarioConfig config = build_config(common);
    ScenarioConfig movers = config;
    movers.isolation_fraction = 0.0;
    const Scenario sc = generate_scenario(movers, 0);
    game = GameInstance(player_states(config, sc), config.params);
  } else {
    if (g.players.empty()) {
      throw ParameterError(
          "describe the game with --player, --two-player or --from-scenario");
    }
    std::vector<PlayerState> states;
    for (const std::string& p : g.players) {
      const auto v = parse_list(p, "--player");
      if (v.size() != 3) throw ParameterError("--player needs delta,d_move,d_home");
      states.push_back({v[0], v[1], v[2]});
    }
    game = GameInstance(std::move(states), params);
  }

  const HomeEquilibriumCertificate cert = home_equilibrium_certificate(*game, limits);
  std::size_t home_dominant = 0;
  for (const auto& e : cert.players) home_dominant += e.home_dominant ? 1 : 0;

  out << "players=" << game->size() << '\n'
      << "method="
      << (cert.method == HomeEquilibriumCertificate::Method::kEnumeration
              ? "enumeration"
              : "analytic")
      << '\n'
      << "alpha_gt_beta=" << yes_no(cert.alpha_gt_beta) << '\n'
      << "premises_hold=" << yes_no(cert.all_premises_hold()) << '\n'
      << "home_dominant=" << home_dominant << '/' << game->size() << '\n';
  if (game->size() <= 32) {
    for (std::size_t i = 0; i < cert.players.size(); ++i) {
      out << "player " << i << ": home_dominant="
          << yes_no(cert.players[i].home_dominant)
          << " premise=" << yes_no(cert.players[i].premise_holds) << '\n';
    }
  }
  if (cert.equilibrium) {
    out << "equilibrium="
        << (cert.all_home() ? std::string("all-home")
                            : to_string(*cert.equilibrium))
        << '\n'
        << "nash=" << yes_no(cert.equilibrium_is_nash) << '\n';
  } else {
    out << "equilibrium=none\n";
  }
  if (g.list_equilibria) {
    for (const StrategyProfile& p : pure_nash_equilibria(*game, limits)) {
      out << "pure_nash=" << to_string(p) << '\n';
    }
  }
  return kExitOk;
}

struct SustainOptions {
  std::optional<double> r0;
  std::optional<double> u;
  std::optional<double> r;
  std::optional<double> r_fraction;
  std::optional<std::uint64_t> days;
};

int run_sustain(const SustainOptions& s, const CommonOptions& common,
                std::ostream& out) {
  const ScenarioConfig config = build_config(common);
  const double r0 = s.r0.value_or(config.r0);
  double u = 0.0;
  if (s.u) {
    u = *s.u;
  } else {
    const MonteCarloResult mc = monte_carlo(config, {common.threads, false});
    u = daily_payout(config, mc.mean_total);
  }
  if (s.r && s.r_fraction) {
    throw ParameterError("give either --r or --r-fraction, not both");
  }
  double r = daily_collection(config, u);
  if (s.r) r = *s.r;
  if (s.r_fraction) r = *s.r_fraction * u;

  const LockdownHorizon h = max_lockdown_days(r0, u, r);
  out << "R0=" << format_number(r0) << '\n'
      << "U=" << format_number(u) << '\n'
      << "r=" << format_number(r) << '\n';
  if (h.indefinite) {
    out << "P=inf\nindefinitely_sustainable=true\n";
  } else {
    out << "P=" << format_number(h.days) << '\n'
        << "whole_days=" << h.whole_days << '\n';
  }
  if (s.days) {
    out << "sustainable_for_" << *s.days << "_days="
        << yes_no(is_sustainable(r0, u, r, *s.days)) << '\n';
  }
  return kExitOk;
}

struct FigureCliOptions {
  std::string id;
  std::string populations;
  std::string fractions;
};

int run_figure(const FigureCliOptions& f, const CommonOptions& common,
               std::ostream& out) {
  const FigureId id = parse_figure_id(f.id);
  const ScenarioConfig config = build_config(common);
  FigureOptions opt;
  opt.threads = common.threads;
  if (!f.populations.empty()) {
    opt.populations.clear();
    for (double v : parse_list(f.populations, "--populations")) {
      if (!(v >= 1.0) || v != std::floor(v)) {
        throw ParameterError("--populations needs positive integers");
      }
      opt.populations.push_back(static_cast<std::size_t>(v));
    }
    opt.omega_populations = opt.populations;
    opt.sustain_population = opt.populations.back();
  }
  if (!f.fractions.empty()) opt.fractions = parse_list(f.fractions, "--fractions");

  const Dataset data = reproduce_figure(id, config, opt);
  const std::string dir = common.out_dir.empty() ? "." : common.out_dir;
  RunManifest manifest{"figure " + to_string(id), config, {}};
  manifest.write_output(dir, data.name + ".csv", to_csv(data));
  manifest.write_output(dir, data.name + ".json", to_json(data));
  manifest.save(dir);
  out << "wrote " << (std::filesystem::path(dir) / (data.name + ".csv")).string()
      << " (" << data.rows.size() << " rows)\n";
  return kExitOk;
}

struct OracleOptions {
  std::vector<std::string> homes;
  std::size_t n = 2;
  std::size_t grid = 5;
  double omega = 0.5;
  double alpha_raw = 3.0;
  double beta_raw = 1.0;
  double z = 1400.0;
  double area = 1000.0;
  double delta_max = ConstraintBounds{}.delta_max;
  double d_min = ConstraintBounds{}.d_min;
  bool no_constraints = false;
  std::uint64_t seed = 1;
};

int run_oracle(const OracleOptions& o, std::ostream& out) {
  TinyInstance inst;
  inst.grid = o.grid;
  inst.area_side = o.area;
  inst.params = PayoffParams::weighted(o.alpha_raw, o.beta_raw, o.omega, o.z);
  inst.bounds.delta_max = o.delta_max;
  inst.bounds.d_min = o.d_min;
  inst.enforce_constraints = !o.no_constraints;
  if (!o.homes.empty()) {
    for (const std::string& h : o.homes) inst.homes.push_back(parse_position(h));
  } else {
    // Distinct random grid points as homes.
    if (o.n < 1 || o.n > 3) throw ParameterError("--n must be 1..3");
    if (o.grid < 2) throw ParameterError("--grid must be >= 2");
    Rng rng(derive_seed(o.seed, 0));
    std::set<std::uint64_t> used;
    while (inst.homes.size() < o.n) {
      const std::uint64_t g = rng.below(o.grid * o.grid);
      if (used.insert(g).second) {
        inst.homes.push_back(grid_point(inst, static_cast<std::size_t>(g)));
      }
    }
  }
  const GridOptimum best = brute_force_optimum(inst);
  out << "evaluations=" << best.evaluations << '\n'
      << "value=" << format_number(best.value) << '\n';
  for (std::size_t i = 0; i < best.positions.size(); ++i) {
    const Position& h = inst.homes[i];
    const Position& p = best.positions[i];
    out << "individual " << i << ": home=" << format_number(h.x) << ','
        << format_number(h.y) << " optimum=" << format_number(p.x) << ','
        << format_number(p.y)
        << " deviation=" << format_number(pairwise_distance(h, p)) << '\n';
  }
  return kExitOk;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Isolation and social-distancing incentive game toolkit",
               "isogame"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version()));

  CommonOptions common;

  auto* simulate = app.add_subcommand("simulate", "run one Monte Carlo experiment");
  add_common(simulate, common, true);

  GameCheckOptions gc;
  auto* game_check = app.add_subcommand(
      "game-check", "dominance and Nash-equilibrium certificate for a game");
  game_check->add_option("--alpha", gc.alpha, "isolation weight");
  game_check->add_option("--beta", gc.beta, "distancing weight");
  game_check->add_option("--z", gc.z, "deviation normalizer Z");
  game_check->add_option("--log-base", gc.log_base, "natural or decimal");
  game_check->add_option("--player", gc.players,
                         "player as delta,d_move,d_home (repeatable)");
  game_check->add_option("--two-player", gc.two_player,
                         "two-individual step game as d1,d2,step");
  game_check->add_option("--directions", gc.directions,
                         "step direction per mover: toward|away")
      ->delimiter(',');
  game_check->add_flag("--from-scenario", gc.from_scenario,
                       "build the game from a generated population");
  game_check->add_option("--max-players", gc.max_players,
                         "cap for exhaustive enumeration");
  game_check->add_flag("--list-equilibria", gc.list_equilibria,
                       "print every pure Nash equilibrium");
  add_common(game_check, common, false);

  SustainOptions su;
  auto* sustain = app.add_subcommand("sustain", "lockdown sustainability horizon");
  sustain->add_option("--R0,--r0", su.r0, "initial resource stock");
  sustain->add_option("--U,--u", su.u, "daily incentive payout");
  sustain->add_option("--r", su.r, "daily collection");
  sustain->add_option("--r-fraction", su.r_fraction,
                      "daily collection as a fraction of the payout");
  sustain->add_option("--days", su.days, "check sustainability for P days");
  add_common(sustain, common, false);

  FigureCliOptions fo;
  auto* figure = app.add_subcommand("figure", "regenerate a plot dataset");
  figure->add_option("id", fo.id, "F2..F7")->required();
  figure->add_option("--populations", fo.populations,
                     "comma-separated population sizes");
  figure->add_option("--fractions", fo.fractions,
                     "comma-separated isolation fractions");
  add_common(figure, common, true);

  OracleOptions oo;
  auto* oracle = app.add_subcommand(
      "oracle", "exhaustive grid optimum of the max-min objective");
  oracle->add_option("--home", oo.homes, "home as x,y (repeatable)");
  oracle->add_option("--n", oo.n, "random homes when --home is absent");
  oracle->add_option("--grid", oo.grid, "grid points per axis");
  oracle->add_option("--omega", oo.omega, "isolation weight in [0,1]");
  oracle->add_option("--alpha-raw", oo.alpha_raw, "base isolation incentive");
  oracle->add_option("--beta-raw", oo.beta_raw, "base distancing incentive");
  oracle->add_option("--z", oo.z, "deviation normalizer Z");
  oracle->add_option("--area", oo.area, "area side in meters");
  oracle->add_option("--delta-max", oo.delta_max, "deviation cap in meters");
  oracle->add_option("--d-min", oo.d_min, "minimum distance in meters");
  oracle->add_flag("--no-constraints", oo.no_constraints,
                   "ignore the deviation cap and distance floor");
  oracle->add_option("--seed", oo.seed, "seed for random homes");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* scope = &app;
    for (const CLI::App* sub : app.get_subcommands()) scope = sub;
    err << scope->help();
    return kExitUsage;
  }

  try {
    if (simulate->parsed()) return run_simulate(common, out);
    if (game_check->parsed()) return run_game_check(gc, common, out);
    if (sustain->parsed()) return run_sustain(su, common, out);
    if (figure->parsed()) return run_figure(fo, common, out);
    if (oracle->parsed()) return run_oracle(oo, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace isogame::cli
