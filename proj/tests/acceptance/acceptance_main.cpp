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


// Acceptance suite. Each criterion prints one PASS/FAIL line; pass
// `--criterion k` (repeatable) to run a subset. Exit status is 0 only when
// every selected criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "isogame/game.hpp"
#include "isogame/objective.hpp"
#include "isogame/scenario.hpp"
#include "isogame/sustainability.hpp"
#include "oracles.hpp"

namespace {

using namespace isogame;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. All-Home is the dominant-strategy equilibrium under the premises.

Verdict equilibrium_theorem() {
  const auto t0 = Clock::now();
  std::mt19937_64 gen(20260101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int all_home = 0, nash = 0, small = 0, small_ok = 0;
  const int instances = 1000;
  for (int k = 0; k < instances; ++k) {
    PayoffParams p;
    p.alpha = 0.01 + 10 * u(gen);
    p.beta = p.alpha * (0.01 + 0.98 * u(gen));
    p.z = 10 + 5000 * u(gen);
    const std::size_t n = 1 + gen() % 12;
    std::vector<PlayerState> players(n);
    for (auto& s : players) {
      s.delta = p.z * (1e-3 + 0.998 * u(gen));
      s.d_move = 1e-2 + 5000 * u(gen);
      s.d_home = s.d_move * (1.0 + 1e-3 + 4 * u(gen));
    }
    const GameInstance g(players, p);
    const auto eq = dominant_strategy_equilibrium(g);
    const bool home = eq && eq->all_are(Strategy::kHome);
    all_home += home;
    nash += home && verify_nash(g, *eq);

    if (n <= 4) {
      ++small;
      // Every profile, every player: switching to Move never pays, and
      // all-Home is the only profile nobody wants to leave.
      bool ok = true;
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        StrategyProfile prof = StrategyProfile::all(n, Strategy::kHome);
        for (std::size_t i = 0; i < n; ++i) {
          if (mask >> i & 1u) prof.strategies[i] = Strategy::kMove;
        }
        for (std::size_t i = 0; i < n; ++i) {
          StrategyProfile h = prof, m = prof;
          h.strategies[i] = Strategy::kHome;
          m.strategies[i] = Strategy::kMove;
          if (g.payoff(i, m) > g.payoff(i, h)) ok = false;
        }
      }
      const auto all = pure_nash_equilibria(g);
      ok = ok && all.size() == 1 && all[0].all_are(Strategy::kHome);
      small_ok += ok;
    }
  }
  const double secs = seconds_since(t0);
  Verdict v;
  v.pass = all_home == instances && nash == instances && small_ok == small &&
           secs < 10.0;
  v.detail = "all-home " + std::to_string(all_home) + "/" +
             std::to_string(instances) + ", nash " + std::to_string(nash) +
             "/" + std::to_string(instances) + ", exhaustive N<=4 " +
             std::to_string(small_ok) + "/" + std::to_string(small) + ", " +
             fixed(secs, 2) + " s";
  return v;
}

// ---------------------------------------------------------------------------
// 2. Payoff differences of the two-individual game against closed forms.

Verdict proof_algebra() {
  std::mt19937_64 gen(20260102);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  const int instances = 100;
  for (int k = 0; k < instances; ++k) {
    PayoffParams p;
    p.alpha = 0.1 + 10 * u(gen);
    p.beta = 0.1 + 10 * u(gen);
    p.z = 100 + 5000 * u(gen);
    const double step = p.z * (0.01 + 0.5 * u(gen));
    const double d1 = 2 * step + 1 + 3000 * u(gen);
    const double d2 = 2 * step + 1 + 3000 * u(gen);
    const StepDirection dir =
        gen() % 2 ? StepDirection::kToward : StepDirection::kAway;
    const auto m = two_player_matrix(p, d1, d2, {step, {dir, dir}});

    const double s = dir == StepDirection::kToward ? -step : step;
    const double iso = p.alpha * std::log(p.z / (p.z - step));
    const auto H = Strategy::kHome;
    const auto M = Strategy::kMove;
    struct Check {
      double got, want;
    };
    const std::vector<Check> checks{
        // Cells of each player's payoff table.
        {m.at(H, H, 0), p.alpha * std::log(p.z) + p.beta * std::log(d1)},
        {m.at(H, M, 0), p.alpha * std::log(p.z) + p.beta * std::log(d1 + s)},
        {m.at(M, H, 0), p.alpha * std::log(p.z - step) + p.beta * std::log(d1 + s)},
        {m.at(M, M, 0),
         p.alpha * std::log(p.z - step) + p.beta * std::log(d1 + 2 * s)},
        {m.at(H, H, 1), p.alpha * std::log(p.z) + p.beta * std::log(d2)},
        {m.at(M, H, 1), p.alpha * std::log(p.z) + p.beta * std::log(d2 + s)},
        {m.at(H, M, 1), p.alpha * std::log(p.z - step) + p.beta * std::log(d2 + s)},
        {m.at(M, M, 1),
         p.alpha * std::log(p.z - step) + p.beta * std::log(d2 + 2 * s)},
        // Player 1 differences.
        {m.at(H, H, 0) - m.at(M, H, 0), iso + p.beta * std::log(d1 / (d1 + s))},
        {m.at(H, M, 0) - m.at(M, M, 0),
         iso + p.beta * std::log((d1 + s) / (d1 + 2 * s))},
        // Player 2 differences.
        {m.at(H, H, 1) - m.at(H, M, 1), iso + p.beta * std::log(d2 / (d2 + s))},
        {m.at(M, H, 1) - m.at(M, M, 1),
         iso + p.beta * std::log((d2 + s) / (d2 + 2 * s))},
    };
    for (const Check& c : checks) {
      worst = std::max(worst, oracle::rel_err(c.got, c.want));
    }
  }
  return {worst <= 1e-9, std::to_string(instances) +
                             " instances, worst relative error " +
                             [&] {
                               std::ostringstream os;
                               os << worst;
                               return os.str();
                             }()};
}

// ---------------------------------------------------------------------------
// 3. Total incentive gain from 25% to 100% isolation.

Verdict total_gain() {
  const auto t0 = Clock::now();
  const ScenarioConfig base;  // defaults, 50 runs
  FigureOptions opt;
  const Dataset d = reproduce_figure(FigureId::kF4, base, opt);
  const double secs = seconds_since(t0);
  const std::size_t cn = d.column("n"), cf = d.column("isolation_fraction"),
                    cm = d.column("mean_total");

  bool gains_ok = true, ordered = true;
  std::string detail;
  for (std::size_t n : opt.populations) {
    std::vector<double> means;
    for (const auto& row : d.rows) {
      if (row[cn] == static_cast<double>(n)) means.push_back(row[cm]);
    }
    for (std::size_t k = 1; k < means.size(); ++k) {
      if (!(means[k] > means[k - 1])) ordered = false;
    }
    const double gain = (means.back() - means.front()) / means.front();
    if (!(gain > 3.0)) gains_ok = false;
    (void)cf;
    detail += "N=" + std::to_string(n) + " gain " + fixed(100 * gain, 1) + "%; ";
  }
  detail += std::string("ordering ") + (ordered ? "monotone" : "broken") +
            ", " + fixed(secs, 1) + " s";
  return {gains_ok && ordered && secs < 120.0, detail};
}

// ---------------------------------------------------------------------------
// 4. Individual incentive trends over repeated 50-run experiments.

Verdict individual_trends() {
  const int repetitions = 20;
  int good = 0;
  FigureOptions opt;
  for (int rep = 0; rep < repetitions; ++rep) {
    ScenarioConfig base;
    base.seed = 1000 + static_cast<std::uint64_t>(rep);
    const Dataset d = reproduce_figure(FigureId::kF5, base, opt);
    const std::size_t cn = d.column("n"), cf = d.column("isolation_fraction"),
                      cm = d.column("mean_individual");
    bool ok = true;
    for (std::size_t n : opt.populations) {
      double prev = -1e300;
      for (const auto& row : d.rows) {
        if (row[cn] != static_cast<double>(n)) continue;
        if (!(row[cm] > prev)) ok = false;
        prev = row[cm];
      }
    }
    double prev = 1e300;
    for (const auto& row : d.rows) {
      if (row[cf] != 0.5) continue;
      if (!(row[cm] < prev)) ok = false;
      prev = row[cm];
    }
    good += ok;
  }
  const double share = static_cast<double>(good) / repetitions;
  return {share >= 0.95, std::to_string(good) + "/" +
                             std::to_string(repetitions) +
                             " repetitions show both trends"};
}

// ---------------------------------------------------------------------------
// 5. Lockdown horizon arithmetic.

Verdict sustainability_arithmetic() {
  const auto h = max_lockdown_days(100, 20, 10);
  const bool example = !h.indefinite && h.days == 10.0;

  std::mt19937_64 gen(20260105);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int consistent = 0;
  const int draws = 1000;
  for (int k = 0; k < draws; ++k) {
    const double ut = 1e-3 + 1e6 * u(gen);
    const double r = ut * 0.999 * u(gen);
    const double r0 = 1e7 * u(gen);
    const double p = max_lockdown_days(r0, ut, r).days;
    const auto whole = static_cast<std::uint64_t>(std::floor(p));
    consistent += is_sustainable(r0, ut, r, whole) &&
                  !is_sustainable(r0, ut, r, whole + 1);
  }

  bool rising = true;
  double prev = 0.0;
  const double ut = 6.0e6, r = 0.1 * ut;
  for (double r0 : {5e23, 5.5e23, 6e23, 6.5e23, 7e23}) {
    const double p = max_lockdown_days(r0, ut, r).days;
    if (!(p > prev)) rising = false;
    prev = p;
  }
  return {example && consistent == draws && rising,
          std::string("P(100, 20, 10) = ") + fixed(h.days, 6) + ", floor check " +
              std::to_string(consistent) + "/" + std::to_string(draws) +
              ", R0 sweep " + (rising ? "increasing" : "not increasing")};
}

// ---------------------------------------------------------------------------
// 6. Lockdown days fall as isolation rises.

Verdict lockdown_direction() {
  const ScenarioConfig base;  // R0 = 5e23, r = 0.10 U
  FigureOptions opt;
  const Dataset d = reproduce_figure(FigureId::kF6, base, opt);
  const std::size_t cn = d.column("n"), cd = d.column("max_days");
  bool ok = true;
  std::string detail;
  for (std::size_t n : opt.populations) {
    double prev = 1e308;
    std::string days;
    for (const auto& row : d.rows) {
      if (row[cn] != static_cast<double>(n)) continue;
      if (!(row[cd] < prev)) ok = false;
      prev = row[cd];
      std::ostringstream os;
      os.precision(4);
      os << row[cd];
      days += (days.empty() ? "" : " > ") + os.str();
    }
    detail += (detail.empty() ? "" : "; ") + ("N=" + std::to_string(n) + ": " + days);
  }
  return {ok, detail};
}

// ---------------------------------------------------------------------------
// 7. Grid optimizer against an independent scan.

Verdict oracle_agreement() {
  std::mt19937_64 gen(20260107);
  int agree = 0, home_checks = 0, home_ok = 0;
  const int instances = 20;
  const double omegas[] = {0.0, 0.5, 1.0};
  for (int k = 0; k < instances; ++k) {
    const double omega = omegas[k % 3];
    // A lone individual has no neighbors, so it only makes sense at omega 1.
    const std::size_t n = omega == 1.0 ? 1 + gen() % 2 : 2;
    TinyInstance t;
    t.grid = 5;
    t.params = PayoffParams::weighted(3, 1, omega);
    std::set<std::size_t> used;
    while (t.homes.size() < n) {
      const std::size_t g = gen() % 25;
      if (used.insert(g).second) t.homes.push_back(grid_point(t, g));
    }
    const GridOptimum best = brute_force_optimum(t);

    oracle::TinyScan s;
    s.homes = t.homes;
    s.k = 5;
    s.omega = omega;
    agree += best.value == oracle::tiny_scan_optimum(s);

    if (omega == 1.0) {
      ++home_checks;
      bool at_home = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(best.positions[i] == t.homes[i])) at_home = false;
      }
      home_ok += at_home;
    }
  }
  return {agree == instances && home_ok == home_checks,
          "values agree " + std::to_string(agree) + "/" +
              std::to_string(instances) + ", omega=1 optimum at home " +
              std::to_string(home_ok) + "/" + std::to_string(home_checks)};
}

// ---------------------------------------------------------------------------
// 8. Repeated CLI runs write identical bytes.

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict determinism() {
  const auto root = std::filesystem::temp_directory_path() / "isogame_accept_c8";
  std::filesystem::remove_all(root);
  struct Case {
    std::vector<std::string> args;
    std::vector<std::string> files;
  };
  const std::vector<Case> cases{
      {{"simulate", "--seed", "42"}, {"simulate_runs.csv", "simulate_ecdf.csv"}},
      {{"figure", "F2", "--seed", "42", "--runs", "10", "--populations", "500"},
       {"figure_F2.csv"}},
      {{"figure", "F3", "--seed", "42", "--populations", "500,1000"},
       {"figure_F3.csv"}},
      {{"figure", "F4", "--seed", "42", "--populations", "500,1000"},
       {"figure_F4.csv"}},
      {{"figure", "F5", "--seed", "7", "--populations", "500"}, {"figure_F5.csv"}},
      {{"figure", "F6", "--seed", "7", "--populations", "500"}, {"figure_F6.csv"}},
      {{"figure", "F7", "--seed", "7", "--populations", "500"}, {"figure_F7.csv"}},
  };
  int identical = 0, compared = 0;
  std::string failures;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    std::vector<std::string> outputs;
    // Same seed three times: serial, parallel, parallel again.
    for (const char* threads : {"1", "4", "4"}) {
      const auto dir = root / (std::to_string(c) + "_" + std::to_string(outputs.size()));
      std::vector<std::string> argv{"isogame"};
      argv.insert(argv.end(), cases[c].args.begin(), cases[c].args.end());
      argv.insert(argv.end(), {"--threads", threads, "--out", dir.string()});
      std::ostringstream out, err;
      if (cli::execute(argv, out, err) != cli::kExitOk) {
        return {false, "command failed: " + err.str()};
      }
      std::string bytes;
      for (const auto& f : cases[c].files) bytes += slurp(dir / f) + '\x1f';
      outputs.push_back(bytes);
    }
    for (std::size_t k = 1; k < outputs.size(); ++k) {
      ++compared;
      if (outputs[k] == outputs[0] && !outputs[0].empty()) {
        ++identical;
      } else {
        failures += " " + cases[c].args[0] + " " + cases[c].args[1];
      }
    }
  }
  std::filesystem::remove_all(root);
  return {identical == compared,
          std::to_string(identical) + "/" + std::to_string(compared) +
              " repeat runs byte-identical" +
              (failures.empty() ? "" : "; differs:" + failures)};
}

const std::vector<std::pair<std::string, std::function<Verdict()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Verdict()>>> all{
      {"equilibrium theorem", equilibrium_theorem},
      {"two-player proof algebra", proof_algebra},
      {"total incentive gain 25% -> 100% isolation", total_gain},
      {"individual incentive trends", individual_trends},
      {"sustainability arithmetic", sustainability_arithmetic},
      {"lockdown days fall with isolation", lockdown_direction},
      {"grid optimizer oracle agreement", oracle_agreement},
      {"CLI determinism", determinism},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      const long k = std::strtol(argv[++i], nullptr, 10);
      if (k < 1 || k > static_cast<long>(criteria().size())) {
        std::cerr << "no criterion " << argv[i] << '\n';
        return 2;
      }
      selected.push_back(static_cast<std::size_t>(k));
    } else {
      std::cerr << "usage: " << argv[0] << " [--criterion k]...\n";
      return 2;
    }
  }
  if (selected.empty()) {
    for (std::size_t k = 1; k <= criteria().size(); ++k) selected.push_back(k);
  }

  int failed = 0;
  for (std::size_t k : selected) {
    const auto& [name, check] = criteria()[k - 1];
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    std::cout << "criterion " << k << " " << (v.pass ? "PASS" : "FAIL") << " ["
              << name << "] " << v.detail << std::endl;
    failed += !v.pass;
  }
  return failed == 0 ? 0 : 1;
}
