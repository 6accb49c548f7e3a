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


#include "isogame/game.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "isogame/errors.hpp"

namespace isogame {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void check_capacity(std::size_t n, const EnumerationLimits& limits) {
  if (n > limits.max_players || n >= 63) {
    throw CapacityError("exhaustive enumeration over " + std::to_string(n) +
                        " players exceeds the cap of " +
                        std::to_string(limits.max_players));
  }
}

StrategyProfile profile_from_mask(std::size_t n, std::uint64_t mask) {
  StrategyProfile p = StrategyProfile::all(n, Strategy::kHome);
  for (std::size_t i = 0; i < n; ++i) {
    if ((mask >> i) & 1U) p.strategies[i] = Strategy::kMove;
  }
  return p;
}

double step_sign(StepDirection d) {
  return d == StepDirection::kToward ? -1.0 : 1.0;
}

}  // namespace

PayoffParams PayoffParams::weighted(double alpha_raw, double beta_raw,
                                    double omega, double z, LogBase base) {
  if (!(omega >= 0.0 && omega <= 1.0)) {
    throw ParameterError("omega must lie in [0, 1], got " + std::to_string(omega));
  }
  PayoffParams p;
  p.alpha = alpha_raw * omega;
  p.beta = beta_raw * (1.0 - omega);
  p.z = z;
  p.log_base = base;
  p.alpha_raw = alpha_raw;
  p.beta_raw = beta_raw;
  p.omega = omega;
  return p;
}

double PayoffParams::log(double v) const {
  return log_base == LogBase::kNatural ? std::log(v) : std::log10(v);
}

void validate_params(const PayoffParams& p) {
  if (!std::isfinite(p.alpha) || p.alpha < 0.0) {
    throw ParameterError("alpha must be finite and >= 0, got " + fmt(p.alpha));
  }
  if (!std::isfinite(p.beta) || p.beta < 0.0) {
    throw ParameterError("beta must be finite and >= 0, got " + fmt(p.beta));
  }
  if (p.alpha == 0.0 && p.beta == 0.0) {
    throw ParameterError("alpha and beta cannot both be zero");
  }
  if (!std::isfinite(p.z) || !(p.z > 0.0)) {
    throw ParameterError("Z must be finite and > 0, got " + fmt(p.z));
  }
  if (p.omega && !(*p.omega >= 0.0 && *p.omega <= 1.0)) {
    throw ParameterError("omega must lie in [0, 1], got " + fmt(*p.omega));
  }
  if (p.alpha_raw.has_value() != p.beta_raw.has_value()) {
    throw ParameterError("alpha_raw and beta_raw must be given together");
  }
  if (p.alpha_raw) {
    if (!p.omega) {
      throw ParameterError("alpha_raw/beta_raw require omega");
    }
    if (!(*p.alpha_raw > 0.0) || !(*p.beta_raw > 0.0)) {
      throw ParameterError("alpha_raw and beta_raw must be > 0");
    }
    if (p.alpha != *p.alpha_raw * *p.omega ||
        p.beta != *p.beta_raw * (1.0 - *p.omega)) {
      throw ParameterError(
          "alpha/beta disagree with alpha_raw*omega and beta_raw*(1-omega)");
    }
  }
}

const char* to_string(Strategy s) {
  return s == Strategy::kHome ? "home" : "move";
}

bool StrategyProfile::all_are(Strategy s) const {
  for (Strategy x : strategies) {
    if (x != s) return false;
  }
  return true;
}

std::string to_string(const StrategyProfile& profile) {
  std::string out;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) out += ',';
    out += to_string(profile[i]);
  }
  return out;
}

double individual_payoff(Strategy strategy, const PlayerState& state,
                         const PayoffParams& params) {
  if (!std::isfinite(state.delta) || state.delta < 0.0) {
    throw DomainError("deviation delta must be finite and >= 0, got " +
                      fmt(state.delta));
  }
  double isolation_arg = params.z;
  double distance_arg = state.d_home;
  const char* distance_name = "d_home";
  if (strategy == Strategy::kMove) {
    isolation_arg = params.z - state.delta;
    distance_arg = state.d_move;
    distance_name = "d_move";
  }

  double u = 0.0;
  if (params.alpha != 0.0) {
    if (!(isolation_arg > 0.0)) {
      throw DomainError("Z - delta must be > 0 (Z = " + fmt(params.z) +
                        ", delta = " + fmt(state.delta) + ")");
    }
    u += params.alpha * params.log(isolation_arg);
  }
  if (params.beta != 0.0) {
    if (!(distance_arg > 0.0) || !std::isfinite(distance_arg)) {
      throw DomainError(std::string(distance_name) +
                        " must be finite and > 0, got " + fmt(distance_arg));
    }
    u += params.beta * params.log(distance_arg);
  }
  return u;
}

double social_incentive(std::span<const PlayerState> states,
                        const StrategyProfile& profile,
                        const PayoffParams& params) {
  if (states.size() != profile.size()) {
    throw ParameterError("profile has " + std::to_string(profile.size()) +
                         " strategies for " + std::to_string(states.size()) +
                         " players");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    total += individual_payoff(profile[i], states[i], params);
  }
  return total;
}

PayoffMatrix2x2 two_player_matrix(const PayoffParams& params, double d1,
                                  double d2, const TwoPlayerStep& step) {
  if (!(step.delta_step > 0.0)) {
    throw DomainError("Laplacian step must be > 0, got " +
                      fmt(step.delta_step));
  }
  if (!(step.delta_step < params.z)) {
    throw DomainError("Laplacian step must be < Z");
  }
  if (!(d1 > 0.0) || !(d2 > 0.0)) {
    throw DomainError("two-player distances must be > 0");
  }
  const std::array<double, 2> d{d1, d2};
  const std::array<double, 2> shift{step_sign(step.direction[0]) * step.delta_step,
                                    step_sign(step.direction[1]) * step.delta_step};

  PayoffMatrix2x2 m;
  for (std::size_t s1 = 0; s1 < 2; ++s1) {
    for (std::size_t s2 = 0; s2 < 2; ++s2) {
      const std::array<bool, 2> moves{s1 == 1, s2 == 1};
      for (std::size_t p = 0; p < 2; ++p) {
        double dist = d[p];
        if (moves[0]) dist += shift[0];
        if (moves[1]) dist += shift[1];
        if (!(dist > 0.0)) {
          throw DomainError("step direction drives player " +
                            std::to_string(p + 1) +
                            "'s distance to " + fmt(dist));
        }
        PlayerState st{step.delta_step, dist, dist};
        m.payoff[s1][s2][p] = individual_payoff(
            moves[p] ? Strategy::kMove : Strategy::kHome, st, params);
      }
    }
  }
  return m;
}

// ---------------------------------------------------------------------------

GameInstance::GameInstance(std::vector<PlayerState> players,
                           PayoffParams params)
    : players_(std::move(players)), params_(std::move(params)) {
  if (players_.empty()) {
    throw ParameterError("a game needs at least one player");
  }
  validate_params(params_);
}

GameInstance GameInstance::two_player(const PayoffParams& params, double d1,
                                      double d2, const TwoPlayerStep& step) {
  const PayoffMatrix2x2 m = two_player_matrix(params, d1, d2, step);
  const double s0 = step_sign(step.direction[0]) * step.delta_step;
  const double s1 = step_sign(step.direction[1]) * step.delta_step;
  GameInstance g({{step.delta_step, d1 + s0, d1}, {step.delta_step, d2 + s1, d2}},
                 params);
  g.matrix_ = m;
  return g;
}

double GameInstance::payoff(std::size_t player,
                            const StrategyProfile& profile) const {
  if (profile.size() != players_.size()) {
    throw ParameterError("profile length does not match player count");
  }
  if (player >= players_.size()) {
    throw std::out_of_range("player " + std::to_string(player));
  }
  if (matrix_) return matrix_->at(profile[0], profile[1], player);
  return individual_payoff(profile[player], players_[player], params_);
}

bool is_dominant_strategy(const GameInstance& game, std::size_t player,
                          Strategy s, const EnumerationLimits& limits) {
  const std::size_t n = game.size();
  if (player >= n) throw std::out_of_range("player " + std::to_string(player));
  check_capacity(n, limits);

  const std::uint64_t opponents = std::uint64_t{1} << (n - 1);
  StrategyProfile profile = StrategyProfile::all(n, Strategy::kHome);
  for (std::uint64_t mask = 0; mask < opponents; ++mask) {
    // Spread the opponent bits around the player's slot.
    for (std::size_t j = 0, bit = 0; j < n; ++j) {
      if (j == player) continue;
      profile.strategies[j] =
          ((mask >> bit++) & 1U) ? Strategy::kMove : Strategy::kHome;
    }
    profile.strategies[player] = s;
    const double with_s = game.payoff(player, profile);
    profile.strategies[player] = other(s);
    const double with_other = game.payoff(player, profile);
    if (!(with_s >= with_other)) return false;
  }
  return true;
}

std::optional<StrategyProfile> dominant_strategy_equilibrium(
    const GameInstance& game, const EnumerationLimits& limits) {
  check_capacity(game.size(), limits);
  StrategyProfile out = StrategyProfile::all(game.size(), Strategy::kHome);
  for (std::size_t i = 0; i < game.size(); ++i) {
    if (is_dominant_strategy(game, i, Strategy::kHome, limits)) continue;
    if (!is_dominant_strategy(game, i, Strategy::kMove, limits)) {
      return std::nullopt;
    }
    out.strategies[i] = Strategy::kMove;
  }
  return out;
}

bool verify_nash(const GameInstance& game, const StrategyProfile& profile) {
  if (profile.size() != game.size()) {
    throw ParameterError("profile length does not match player count");
  }
  StrategyProfile flipped = profile;
  for (std::size_t i = 0; i < game.size(); ++i) {
    const double current = game.payoff(i, profile);
    flipped.strategies[i] = other(profile[i]);
    const double deviated = game.payoff(i, flipped);
    flipped.strategies[i] = profile[i];
    if (deviated > current) return false;
  }
  return true;
}

std::vector<StrategyProfile> pure_nash_equilibria(
    const GameInstance& game, const EnumerationLimits& limits) {
  check_capacity(game.size(), limits);
  std::vector<StrategyProfile> out;
  const std::uint64_t profiles = std::uint64_t{1} << game.size();
  for (std::uint64_t mask = 0; mask < profiles; ++mask) {
    StrategyProfile p = profile_from_mask(game.size(), mask);
    if (verify_nash(game, p)) out.push_back(std::move(p));
  }
  return out;
}

bool HomeEquilibriumCertificate::all_premises_hold() const {
  for (const PlayerEvidence& e : players) {
    if (!e.premise_holds) return false;
  }
  return true;
}

HomeEquilibriumCertificate home_equilibrium_certificate(
    const GameInstance& game, const EnumerationLimits& limits) {
  HomeEquilibriumCertificate cert;
  const PayoffParams& params = game.params();
  cert.alpha_gt_beta = params.alpha > params.beta;
  const bool enumerate = game.coupled() || game.size() <= limits.max_players;
  cert.method = enumerate ? HomeEquilibriumCertificate::Method::kEnumeration
                          : HomeEquilibriumCertificate::Method::kAnalytic;

  StrategyProfile eq = StrategyProfile::all(game.size(), Strategy::kHome);
  bool has_eq = true;
  cert.players.reserve(game.size());
  for (std::size_t i = 0; i < game.size(); ++i) {
    const PlayerState& st = game.players()[i];
    PlayerEvidence ev;
    ev.premise_holds = params.z > st.delta && st.delta > 0.0 &&
                       st.d_home > st.d_move && st.d_move > 0.0;
    bool move_dominant = false;
    if (enumerate) {
      ev.home_dominant = is_dominant_strategy(game, i, Strategy::kHome, limits);
      if (!ev.home_dominant) {
        move_dominant = is_dominant_strategy(game, i, Strategy::kMove, limits);
      }
    } else {
      const double home = individual_payoff(Strategy::kHome, st, params);
      const double move = individual_payoff(Strategy::kMove, st, params);
      ev.home_dominant = home >= move;
      move_dominant = move >= home;
    }
    if (!ev.home_dominant) {
      if (move_dominant) {
        eq.strategies[i] = Strategy::kMove;
      } else {
        has_eq = false;
      }
    }
    cert.players.push_back(ev);
  }
  if (has_eq) {
    cert.equilibrium_is_nash = verify_nash(game, eq);
    cert.equilibrium = std::move(eq);
  }
  return cert;
}

}  // namespace isogame
