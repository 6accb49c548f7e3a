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


#ifndef ISOGAME_GEOMETRY_HPP_
#define ISOGAME_GEOMETRY_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace isogame {

// Planar coordinates in meters.
struct Position {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Position&, const Position&) = default;
};

bool is_finite(const Position& p);

// Location history of one individual over a period of T small timesteps.
// steps[t-1] is the position at the end of timestep t.
struct MobilityTrace {
  Position home;
  std::vector<Position> steps;

  std::size_t timesteps() const { return steps.size(); }
  const Position& final_position() const { return steps.back(); }

  // A trace that never leaves home.
  static MobilityTrace stay_home(const Position& home, std::size_t timesteps);
};

// Throws ParameterError unless the trace has T >= 1 finite positions.
void validate_trace(const MobilityTrace& trace);

// End-of-period positions and homes of N individuals. Immutable once built.
class PopulationSnapshot {
 public:
  PopulationSnapshot(std::vector<Position> positions,
                     std::vector<Position> homes);

  std::size_t size() const { return positions_.size(); }
  const std::vector<Position>& positions() const { return positions_; }
  const std::vector<Position>& homes() const { return homes_; }
  const Position& position(std::size_t i) const { return positions_.at(i); }
  const Position& home(std::size_t i) const { return homes_.at(i); }

 private:
  std::vector<Position> positions_;
  std::vector<Position> homes_;
};

// Who counts as "in close proximity" of an individual.
struct ProximityRule {
  enum class Mode { kFixedCount, kRadius };

  static constexpr std::size_t kDefaultCount = 10;

  Mode mode = Mode::kFixedCount;
  std::size_t count = kDefaultCount;
  double radius = 0.0;

  static ProximityRule nearest(std::size_t c) {
    return {Mode::kFixedCount, c, 0.0};
  }
  static ProximityRule within(double r) { return {Mode::kRadius, 0, r}; }

  friend bool operator==(const ProximityRule&, const ProximityRule&) = default;
};

// Throws ParameterError if the rule cannot be applied to a population of n.
void validate_rule(const ProximityRule& rule, std::size_t n);

// Deviation during timestep t (1-based): home -> steps[0] for t == 1,
// steps[t-2] -> steps[t-1] otherwise. Throws std::out_of_range for t
// outside [1, T].
double step_deviation(const MobilityTrace& trace, std::size_t t);

// Sum of step deviations over the whole period.
double total_deviation(const MobilityTrace& trace);

double pairwise_distance(const Position& a, const Position& b);

// Members of individual i's proximity set, in ascending index order.
// Fixed-count mode picks the C nearest end positions, ties broken by
// ascending index; radius mode picks every j with distance <= r.
// This is the O(N) reference scan; proximity_sets() is the bulk path.
std::vector<std::size_t> proximity_set(std::size_t i,
                                       const PopulationSnapshot& snapshot,
                                       const ProximityRule& rule);

// proximity_set() for every individual, backed by a uniform grid.
std::vector<std::vector<std::size_t>> proximity_sets(
    const PopulationSnapshot& snapshot, const ProximityRule& rule);

// Sum of distances from individual i's end position to each member of
// `proximity`. Throws ParameterError if i is listed or an index is out of
// range.
double aggregate_distance(std::size_t i, const PopulationSnapshot& snapshot,
                          std::span<const std::size_t> proximity);

// Same sum measured from an arbitrary origin (e.g. i's home instead of
// where i ended up).
double aggregate_distance_from(const Position& origin,
                               const PopulationSnapshot& snapshot,
                               std::span<const std::size_t> proximity);

// Uniform bucket grid over a fixed point set, answering exact k-nearest and
// fixed-radius queries with the same ordering as the reference scan.
class NeighborGrid {
 public:
  explicit NeighborGrid(std::span<const Position> points);

  // The k nearest points to points[self] other than self, ordered by
  // (distance, index).
  std::vector<std::size_t> nearest(std::size_t self, std::size_t k) const;

  // All points other than self within distance r of points[self], in
  // ascending index order.
  std::vector<std::size_t> within(std::size_t self, double r) const;

 private:
  std::size_t cell_of(double v, double lo, std::size_t cells) const;

  std::vector<Position> points_;
  double min_x_ = 0.0;
  double min_y_ = 0.0;
  double cell_ = 1.0;
  std::size_t nx_ = 1;
  std::size_t ny_ = 1;
  // CSR layout: bucket c holds order_[start_[c] .. start_[c+1]).
  std::vector<std::size_t> start_;
  std::vector<std::size_t> order_;
};

}  // namespace isogame

#endif  // ISOGAME_GEOMETRY_HPP_
