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


#ifndef ISOGAME_GAME_HPP_
#define ISOGAME_GAME_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace isogame {

enum class LogBase { kNatural, kDecimal };

// Incentive weights of the isolation/distancing payoff
//   u = alpha * log(Z - delta) + beta * log(d).
struct PayoffParams {
  double alpha = 3.0;  // per unit of isolation
  double beta = 1.0;   // per unit of social distance
  double z = 1400.0;   // deviation normalizer, meters
  LogBase log_base = LogBase::kNatural;
  // Present when alpha/beta were derived from base incentives and a weight.
  std::optional<double> alpha_raw;
  std::optional<double> beta_raw;
  std::optional<double> omega;

  // alpha = alpha_raw * omega, beta = beta_raw * (1 - omega).
  static PayoffParams weighted(double alpha_raw, double beta_raw, double omega,
                               double z = 1400.0,
                               LogBase base = LogBase::kNatural);

  double log(double v) const;

  friend bool operator==(const PayoffParams&, const PayoffParams&) = default;
};

// Throws ParameterError on alpha < 0, beta < 0, alpha == beta == 0, Z <= 0,
// omega outside [0, 1], or weights inconsistent with alpha_raw/beta_raw.
void validate_params(const PayoffParams& params);

enum class Strategy { kHome, kMove };

const char* to_string(Strategy s);
inline Strategy other(Strategy s) {
  return s == Strategy::kHome ? Strategy::kMove : Strategy::kHome;
}

// Payoff inputs of one individual for one period.
struct PlayerState {
  double delta = 0.0;   // total deviation from home when moving
  double d_move = 0.0;  // aggregate neighbor distance when moving
  double d_home = 0.0;  // aggregate neighbor distance when at home
};

// One strategy per player.
struct StrategyProfile {
  std::vector<Strategy> strategies;

  static StrategyProfile all(std::size_t n, Strategy s) {
    return {std::vector<Strategy>(n, s)};
  }
  std::size_t size() const { return strategies.size(); }
  Strategy operator[](std::size_t i) const { return strategies[i]; }
  bool all_are(Strategy s) const;

  friend bool operator==(const StrategyProfile&,
                         const StrategyProfile&) = default;
};

std::string to_string(const StrategyProfile& profile);

// Payoff of one player given only its own strategy:
//   Home -> alpha log Z + beta log d_home
//   Move -> alpha log(Z - delta) + beta log d_move
// A term whose weight is exactly zero is dropped. Throws DomainError naming
// the offending quantity when a log argument is not positive.
double individual_payoff(Strategy strategy, const PlayerState& state,
                         const PayoffParams& params);

// Sum of individual payoffs over the population.
double social_incentive(std::span<const PlayerState> states,
                        const StrategyProfile& profile,
                        const PayoffParams& params);

// ---------------------------------------------------------------------------
// Two-individual proof game with a fixed Laplacian step.

enum class StepDirection { kToward, kAway };

struct TwoPlayerStep {
  double delta_step = 0.0;  // distance covered by a mover, meters
  std::array<StepDirection, 2> direction{StepDirection::kToward,
                                         StepDirection::kToward};
};

// payoff[s1][s2][player], indexed by static_cast<int>(Strategy).
struct PayoffMatrix2x2 {
  std::array<std::array<std::array<double, 2>, 2>, 2> payoff{};

  double at(Strategy s1, Strategy s2, std::size_t player) const {
    return payoff[static_cast<std::size_t>(s1)][static_cast<std::size_t>(s2)]
                 [player];
  }
};

// Table of u1, u2 for the four profiles. A mover shifts the pair distance
// by -step (toward) or +step (away); two movers add their shifts, which
// gives d +- 2*step when both go the same way.
PayoffMatrix2x2 two_player_matrix(const PayoffParams& params, double d1,
                                  double d2, const TwoPlayerStep& step);

// ---------------------------------------------------------------------------
// N-player game.

// A finite game where each player picks Home or Move. In the default form
// each payoff depends only on the player's own strategy and PlayerState; a
// game built from a PayoffMatrix2x2 couples the two players.
class GameInstance {
 public:
  GameInstance(std::vector<PlayerState> players, PayoffParams params);

  static GameInstance two_player(const PayoffParams& params, double d1,
                                 double d2, const TwoPlayerStep& step);

  std::size_t size() const { return players_.size(); }
  const std::vector<PlayerState>& players() const { return players_; }
  const PayoffParams& params() const { return params_; }
  bool coupled() const { return matrix_.has_value(); }

  double payoff(std::size_t player, const StrategyProfile& profile) const;

 private:
  std::vector<PlayerState> players_;
  PayoffParams params_;
  std::optional<PayoffMatrix2x2> matrix_;
};

struct EnumerationLimits {
  // Exhaustive checks visit 2^(N-1) opponent profiles per player.
  std::size_t max_players = 20;
};

// Weak dominance: s is at least as good as the alternative against every
// opponent profile. Throws CapacityError above limits.max_players.
bool is_dominant_strategy(const GameInstance& game, std::size_t player,
                          Strategy s, const EnumerationLimits& limits = {});

// Profile of weakly dominant strategies (Home preferred when both are), or
// nullopt when some player has none.
std::optional<StrategyProfile> dominant_strategy_equilibrium(
    const GameInstance& game, const EnumerationLimits& limits = {});

// No player gains strictly by a unilateral switch.
bool verify_nash(const GameInstance& game, const StrategyProfile& profile);

// Every pure Nash equilibrium, by scanning all 2^N profiles. Profiles are
// listed in mask order, bit i set meaning player i moves.
std::vector<StrategyProfile> pure_nash_equilibria(
    const GameInstance& game, const EnumerationLimits& limits = {});

struct PlayerEvidence {
  bool home_dominant = false;
  // Z > delta > 0 and d_home > d_move > 0.
  bool premise_holds = false;
};

struct HomeEquilibriumCertificate {
  enum class Method { kEnumeration, kAnalytic };

  bool alpha_gt_beta = false;
  std::vector<PlayerEvidence> players;
  std::optional<StrategyProfile> equilibrium;
  bool equilibrium_is_nash = false;
  Method method = Method::kEnumeration;

  bool all_premises_hold() const;
  bool all_home() const {
    return equilibrium.has_value() && equilibrium->all_are(Strategy::kHome);
  }
};

// Evidence for "Home is a dominant strategy for everyone". Enumerates when
// the game is small enough; larger uncoupled games are certified by the
// direct per-player comparison, which is exact because an uncoupled payoff
// ignores the opponents.
HomeEquilibriumCertificate home_equilibrium_certificate(
    const GameInstance& game, const EnumerationLimits& limits = {});

}  // namespace isogame

#endif  // ISOGAME_GAME_HPP_
