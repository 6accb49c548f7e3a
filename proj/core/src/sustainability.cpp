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


#include "isogame/sustainability.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "isogame/errors.hpp"

namespace isogame {

int ResourcePolicy::slots_per_day() const {
  if (slot_minutes <= 0 || kMinutesPerDay % slot_minutes != 0) {
    throw ParameterError("slot length " + std::to_string(slot_minutes) +
                         " min does not divide 1440");
  }
  return kMinutesPerDay / slot_minutes;
}

double ResourcePolicy::collected_on(std::size_t day) const {
  if (const double* c = std::get_if<double>(&collected)) return *c;
  const auto& list = std::get<std::vector<double>>(collected);
  if (day >= list.size()) {
    throw ParameterError("no collection recorded for day " +
                         std::to_string(day + 1));
  }
  return list[day];
}

void validate_policy(const ResourcePolicy& policy) {
  if (!(policy.r0 >= 0.0) || !std::isfinite(policy.r0)) {
    throw ParameterError("R0 must be finite and >= 0");
  }
  policy.slots_per_day();
  const auto bad = [](double v) { return !(v >= 0.0) || !std::isfinite(v); };
  if (const double* c = std::get_if<double>(&policy.collected)) {
    if (bad(*c)) throw ParameterError("daily collection must be >= 0");
  } else {
    for (double v : std::get<std::vector<double>>(policy.collected)) {
      if (bad(v)) throw ParameterError("daily collection must be >= 0");
    }
  }
}

double slot_incentive(std::span<const PlayerState> states,
                      const StrategyProfile& profile,
                      const PayoffParams& params) {
  return social_incentive(states, profile, params);
}

DailyIncentive daily_incentive(std::span<const double> slots,
                               int slots_per_day) {
  if (slots_per_day <= 0 ||
      slots.size() != static_cast<std::size_t>(slots_per_day)) {
    throw ParameterError("a day has " + std::to_string(slots_per_day) +
                         " slots, got " + std::to_string(slots.size()));
  }
  DailyIncentive day{{slots.begin(), slots.end()}, 0.0};
  for (double u : slots) day.total += u;
  return day;
}

bool is_sustainable(const ResourcePolicy& policy,
                    std::span<const DailyIncentive> days) {
  validate_policy(policy);
  double paid = 0.0;
  double available = policy.r0;
  for (std::size_t p = 0; p < days.size(); ++p) {
    paid += days[p].total;
    available += policy.collected_on(p);
  }
  return paid <= available;
}

bool is_sustainable(double r0, double u_tilde, double r_tilde,
                    std::uint64_t days) {
  const auto p = static_cast<double>(days);
  return p * u_tilde <= r0 + p * r_tilde;
}

LockdownHorizon max_lockdown_days(double r0, double u_tilde, double r_tilde) {
  if (!(r0 >= 0.0) || !std::isfinite(r0)) {
    throw ParameterError("R0 must be finite and >= 0");
  }
  if (!std::isfinite(u_tilde) || !std::isfinite(r_tilde) || r_tilde < 0.0) {
    throw ParameterError("daily payout and collection must be finite, "
                         "collection >= 0");
  }
  LockdownHorizon h;
  if (u_tilde <= r_tilde) {
    h.indefinite = true;
    h.days = std::numeric_limits<double>::infinity();
    h.whole_days = std::numeric_limits<std::uint64_t>::max();
    return h;
  }
  h.days = r0 / (u_tilde - r_tilde);
  if (!(h.days < 1.8e19)) {
    h.whole_days = std::numeric_limits<std::uint64_t>::max();
    return h;
  }
  h.whole_days = static_cast<std::uint64_t>(std::floor(h.days));
  // The quotient can round across an integer; settle on the day count the
  // budget check itself accepts. Past 2^52 days the check cannot tell
  // neighbors apart.
  if (h.days > 0x1.0p52) return h;
  while (h.whole_days > 0 &&
         !is_sustainable(r0, u_tilde, r_tilde, h.whole_days)) {
    --h.whole_days;
  }
  while (is_sustainable(r0, u_tilde, r_tilde, h.whole_days + 1)) {
    ++h.whole_days;
  }
  return h;
}

}  // namespace isogame
