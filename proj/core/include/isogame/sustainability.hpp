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


#ifndef ISOGAME_SUSTAINABILITY_HPP_
#define ISOGAME_SUSTAINABILITY_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "isogame/game.hpp"

namespace isogame {

inline constexpr int kMinutesPerDay = 24 * 60;

// Budget available for lockdown incentives.
struct ResourcePolicy {
  double r0 = 5e23;  // initial stock
  // Either a constant daily collection or one value per day.
  std::variant<double, std::vector<double>> collected = 0.0;
  int slot_minutes = 30;

  // Number of periods per day, 1440 / slot_minutes.
  int slots_per_day() const;
  // Resources collected on day p (0-based). Throws ParameterError when a
  // per-day list is too short.
  double collected_on(std::size_t day) const;
};

// Throws ParameterError unless R0 >= 0, collections >= 0, and the slot
// length divides a day evenly.
void validate_policy(const ResourcePolicy& policy);

// Incentive paid over one day.
struct DailyIncentive {
  std::vector<double> slots;
  double total = 0.0;
};

// Incentive of one time slot: the social incentive of that slot's players.
double slot_incentive(std::span<const PlayerState> states,
                      const StrategyProfile& profile,
                      const PayoffParams& params);

// Sums a day's slot incentives. Throws ParameterError unless there is one
// value per slot.
DailyIncentive daily_incentive(std::span<const double> slots,
                               int slots_per_day);

// Whether the cumulative payout over the listed days stays within the
// starting stock plus everything collected on those days.
bool is_sustainable(const ResourcePolicy& policy,
                    std::span<const DailyIncentive> days);

// Constant-series convenience: P days of payout u against collection r.
bool is_sustainable(double r0, double u_tilde, double r_tilde,
                    std::uint64_t days);

struct LockdownHorizon {
  // Daily collection covers the daily payout; no finite horizon.
  bool indefinite = false;
  double days = 0.0;             // R0 / (U - r)
  std::uint64_t whole_days = 0;  // floor(days)
};

// Longest affordable lockdown R0 / (U - r) for constant daily payout U and
// collection r.
LockdownHorizon max_lockdown_days(double r0, double u_tilde, double r_tilde);

}  // namespace isogame

#endif  // ISOGAME_SUSTAINABILITY_HPP_
