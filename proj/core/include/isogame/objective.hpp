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


#ifndef ISOGAME_OBJECTIVE_HPP_
#define ISOGAME_OBJECTIVE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isogame/game.hpp"
#include "isogame/geometry.hpp"

namespace isogame {

// Emergency-deviation cap and minimum fair distance.
struct ConstraintBounds {
  double delta_max = 500.0;  // meters
  double d_min = 2.0;        // meters
  // Enforce the distance floor over every pair instead of proximity pairs.
  bool all_pairs = false;

  friend bool operator==(const ConstraintBounds&,
                         const ConstraintBounds&) = default;
};

void validate_bounds(const ConstraintBounds& bounds);

enum class ConstraintId { kDeviationCap, kMinDistance, kWeightRange };

const char* to_string(ConstraintId id);

struct Violation {
  ConstraintId constraint = ConstraintId::kDeviationCap;
  std::size_t individual = 0;
  std::optional<std::size_t> other;  // second member of a pair violation
  double amount = 0.0;               // how far past the bound
};

struct FeasibilityReport {
  std::vector<Violation> violations;

  bool feasible() const { return violations.empty(); }
  std::size_t count(ConstraintId id) const;
};

// Per-individual term log[(Z - delta_i)^omega * d_i^(1 - omega)], with
// delta_i from the trace and d_i over the proximity set. Requires
// params.omega. A factor with a zero exponent is dropped.
std::vector<double> maxmin_terms(const PopulationSnapshot& snapshot,
                                 std::span<const MobilityTrace> traces,
                                 const PayoffParams& params,
                                 const ProximityRule& rule);

// Same, over precomputed proximity sets.
std::vector<double> maxmin_terms(
    const PopulationSnapshot& snapshot, std::span<const MobilityTrace> traces,
    const PayoffParams& params,
    const std::vector<std::vector<std::size_t>>& proximity);

// Minimum of maxmin_terms(). Throws DomainError on a non-positive log
// argument.
double maxmin_objective(const PopulationSnapshot& snapshot,
                        std::span<const MobilityTrace> traces,
                        const PayoffParams& params, const ProximityRule& rule);

// Lists every deviation-cap, distance-floor and weight-range violation.
// Pairs are taken from the proximity sets unless bounds.all_pairs is set;
// a pair that appears in both directions is reported once.
FeasibilityReport check_constraints(const PopulationSnapshot& snapshot,
                                    std::span<const MobilityTrace> traces,
                                    const ConstraintBounds& bounds,
                                    std::optional<double> omega,
                                    const ProximityRule& rule);

FeasibilityReport check_constraints(
    const PopulationSnapshot& snapshot, std::span<const MobilityTrace> traces,
    const ConstraintBounds& bounds, std::optional<double> omega,
    const std::vector<std::vector<std::size_t>>& proximity);

// A problem small enough to solve by scanning every placement of the N
// individuals on a k x k grid covering [0, area_side]^2. Each individual
// reaches its grid point in one step from home, and everyone else counts
// as in proximity.
struct TinyInstance {
  std::vector<Position> homes;  // N <= 3
  double area_side = 1000.0;
  std::size_t grid = 5;
  PayoffParams params;  // omega must be set
  ConstraintBounds bounds;
  bool enforce_constraints = true;
  std::uint64_t max_evaluations = 10'000'000;
};

struct GridOptimum {
  std::vector<Position> positions;
  double value = 0.0;
  std::uint64_t evaluations = 0;
};

// The grid point (x, y) for index g = ix * k + iy; grid order is
// lexicographic in (x, y).
Position grid_point(const TinyInstance& instance, std::size_t g);

// Global maximizer of maxmin_objective over the grid. Placements with an
// undefined objective or (when enforced) a constraint violation are
// skipped; the first maximizer in lexicographic placement order wins.
// Throws CapacityError past max_evaluations and DomainError when no
// placement qualifies.
GridOptimum brute_force_optimum(const TinyInstance& instance);

}  // namespace isogame

#endif  // ISOGAME_OBJECTIVE_HPP_
