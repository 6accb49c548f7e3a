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


#include "isogame/objective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "isogame/errors.hpp"

namespace isogame {

namespace {

void check_traces(const PopulationSnapshot& snapshot,
                  std::span<const MobilityTrace> traces) {
  if (traces.size() != snapshot.size()) {
    throw ParameterError("got " + std::to_string(traces.size()) +
                         " traces for a population of " +
                         std::to_string(snapshot.size()));
  }
}

void check_proximity(const PopulationSnapshot& snapshot,
                     const std::vector<std::vector<std::size_t>>& proximity) {
  if (proximity.size() != snapshot.size()) {
    throw ParameterError("proximity sets do not match the population size");
  }
}

}  // namespace

void validate_bounds(const ConstraintBounds& bounds) {
  if (!(bounds.delta_max >= 0.0) || !std::isfinite(bounds.delta_max)) {
    throw ParameterError("delta_max must be finite and >= 0");
  }
  if (!(bounds.d_min > 0.0) || !std::isfinite(bounds.d_min)) {
    throw ParameterError("d_min must be finite and > 0");
  }
}

const char* to_string(ConstraintId id) {
  switch (id) {
    case ConstraintId::kDeviationCap:
      return "deviation_cap";
    case ConstraintId::kMinDistance:
      return "min_distance";
    case ConstraintId::kWeightRange:
      return "weight_range";
  }
  return "unknown";
}

std::size_t FeasibilityReport::count(ConstraintId id) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(),
                    [id](const Violation& v) { return v.constraint == id; }));
}

std::vector<double> maxmin_terms(
    const PopulationSnapshot& snapshot, std::span<const MobilityTrace> traces,
    const PayoffParams& params,
    const std::vector<std::vector<std::size_t>>& proximity) {
  check_traces(snapshot, traces);
  check_proximity(snapshot, proximity);
  if (!params.omega) {
    throw ParameterError("the max-min objective needs omega");
  }
  const double omega = *params.omega;
  if (!(omega >= 0.0 && omega <= 1.0)) {
    throw ParameterError("omega must lie in [0, 1]");
  }

  std::vector<double> terms(snapshot.size());
  for (std::size_t i = 0; i < snapshot.size(); ++i) {
    double t = 0.0;
    if (omega != 0.0) {
      const double slack = params.z - total_deviation(traces[i]);
      if (!(slack > 0.0)) {
        throw DomainError("individual " + std::to_string(i) +
                          ": Z - delta must be > 0");
      }
      t += omega * params.log(slack);
    }
    if (1.0 - omega != 0.0) {
      const double d = aggregate_distance(i, snapshot, proximity[i]);
      if (!(d > 0.0)) {
        throw DomainError("individual " + std::to_string(i) +
                          ": aggregate distance must be > 0");
      }
      t += (1.0 - omega) * params.log(d);
    }
    terms[i] = t;
  }
  return terms;
}

std::vector<double> maxmin_terms(const PopulationSnapshot& snapshot,
                                 std::span<const MobilityTrace> traces,
                                 const PayoffParams& params,
                                 const ProximityRule& rule) {
  return maxmin_terms(snapshot, traces, params,
                      proximity_sets(snapshot, rule));
}

double maxmin_objective(const PopulationSnapshot& snapshot,
                        std::span<const MobilityTrace> traces,
                        const PayoffParams& params, const ProximityRule& rule) {
  const std::vector<double> terms =
      maxmin_terms(snapshot, traces, params, rule);
  return *std::min_element(terms.begin(), terms.end());
}

FeasibilityReport check_constraints(
    const PopulationSnapshot& snapshot, std::span<const MobilityTrace> traces,
    const ConstraintBounds& bounds, std::optional<double> omega,
    const std::vector<std::vector<std::size_t>>& proximity) {
  check_traces(snapshot, traces);
  FeasibilityReport report;

  for (std::size_t i = 0; i < snapshot.size(); ++i) {
    const double delta = total_deviation(traces[i]);
    if (delta > bounds.delta_max) {
      report.violations.push_back(
          {ConstraintId::kDeviationCap, i, std::nullopt, delta - bounds.delta_max});
    }
  }

  const auto check_pair = [&](std::size_t i, std::size_t j) {
    const double d = pairwise_distance(snapshot.position(i), snapshot.position(j));
    if (d < bounds.d_min) {
      report.violations.push_back(
          {ConstraintId::kMinDistance, i, j, bounds.d_min - d});
    }
  };
  if (bounds.all_pairs) {
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) check_pair(i, j);
    }
  } else {
    check_proximity(snapshot, proximity);
    // Each unordered pair once: (i, j) with j < i is skipped when j's own
    // set already lists i.
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (const std::size_t j : proximity[i]) {
        if (j == i) continue;
        if (j >= snapshot.size()) {
          throw ParameterError("proximity index out of range");
        }
        if (j < i) {
          const auto& back = proximity[j];
          if (std::find(back.begin(), back.end(), i) != back.end()) continue;
        }
        check_pair(i, j);
      }
    }
  }

  if (omega && !(*omega >= 0.0 && *omega <= 1.0)) {
    const double amount = *omega < 0.0 ? -*omega : *omega - 1.0;
    report.violations.push_back(
        {ConstraintId::kWeightRange, 0, std::nullopt,
         std::isfinite(amount) ? amount : std::numeric_limits<double>::infinity()});
  }
  return report;
}

FeasibilityReport check_constraints(const PopulationSnapshot& snapshot,
                                    std::span<const MobilityTrace> traces,
                                    const ConstraintBounds& bounds,
                                    std::optional<double> omega,
                                    const ProximityRule& rule) {
  if (bounds.all_pairs) {
    return check_constraints(snapshot, traces, bounds, omega,
                             std::vector<std::vector<std::size_t>>{});
  }
  return check_constraints(snapshot, traces, bounds, omega,
                           proximity_sets(snapshot, rule));
}

Position grid_point(const TinyInstance& instance, std::size_t g) {
  const std::size_t k = instance.grid;
  const double step = instance.area_side / static_cast<double>(k - 1);
  return {static_cast<double>(g / k) * step, static_cast<double>(g % k) * step};
}

GridOptimum brute_force_optimum(const TinyInstance& instance) {
  const std::size_t n = instance.homes.size();
  if (n < 1 || n > 3) {
    throw ParameterError("brute-force oracle handles 1 to 3 individuals");
  }
  if (instance.grid < 2) throw ParameterError("grid needs k >= 2");
  if (!(instance.area_side > 0.0)) throw ParameterError("area_side must be > 0");
  validate_params(instance.params);
  validate_bounds(instance.bounds);
  if (!instance.params.omega) {
    throw ParameterError("brute-force oracle needs omega");
  }

  const std::uint64_t cells =
      static_cast<std::uint64_t>(instance.grid) * instance.grid;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > instance.max_evaluations / cells + 1) {
      total = instance.max_evaluations + 1;
      break;
    }
    total *= cells;
  }
  if (total > instance.max_evaluations) {
    throw CapacityError("grid scan needs more than " +
                        std::to_string(instance.max_evaluations) +
                        " evaluations");
  }

  // Everyone else is in proximity.
  std::vector<std::vector<std::size_t>> proximity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) proximity[i].push_back(j);
    }
  }

  GridOptimum best;
  best.value = -std::numeric_limits<double>::infinity();
  bool found = false;
  std::vector<std::size_t> digit(n, 0);
  std::vector<Position> positions(n);
  std::vector<MobilityTrace> traces(n);
  for (std::uint64_t c = 0; c < total; ++c) {
    // Individual 0 is the most significant digit, so c runs through
    // placements in lexicographic order.
    std::uint64_t rest = c;
    for (std::size_t i = n; i-- > 0;) {
      digit[i] = static_cast<std::size_t>(rest % cells);
      rest /= cells;
    }
    for (std::size_t i = 0; i < n; ++i) {
      positions[i] = grid_point(instance, digit[i]);
      traces[i] = MobilityTrace{instance.homes[i], {positions[i]}};
    }
    const PopulationSnapshot snapshot(positions, instance.homes);
    ++best.evaluations;

    if (instance.enforce_constraints &&
        !check_constraints(snapshot, traces, instance.bounds,
                           instance.params.omega, proximity)
             .feasible()) {
      continue;
    }
    double value = 0.0;
    try {
      const std::vector<double> terms =
          maxmin_terms(snapshot, traces, instance.params, proximity);
      value = *std::min_element(terms.begin(), terms.end());
    } catch (const DomainError&) {
      continue;
    }
    if (!found || value > best.value) {
      found = true;
      best.value = value;
      best.positions = positions;
    }
  }
  if (!found) {
    throw DomainError("no grid placement has a defined, feasible objective");
  }
  return best;
}

}  // namespace isogame
