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


#include "isogame/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

#include "isogame/errors.hpp"

namespace isogame {

namespace {

using Candidate = std::pair<double, std::size_t>;  // (distance, index)

std::vector<std::size_t> by_index(std::vector<std::size_t> ids) {
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

bool is_finite(const Position& p) {
  return std::isfinite(p.x) && std::isfinite(p.y);
}

MobilityTrace MobilityTrace::stay_home(const Position& home,
                                       std::size_t timesteps) {
  return MobilityTrace{home, std::vector<Position>(timesteps, home)};
}

void validate_trace(const MobilityTrace& trace) {
  if (trace.steps.empty()) {
    throw ParameterError("mobility trace needs at least one timestep");
  }
  if (!is_finite(trace.home)) {
    throw ParameterError("mobility trace has a non-finite home position");
  }
  for (const Position& p : trace.steps) {
    if (!is_finite(p)) {
      throw ParameterError("mobility trace has a non-finite step position");
    }
  }
}

PopulationSnapshot::PopulationSnapshot(std::vector<Position> positions,
                                       std::vector<Position> homes)
    : positions_(std::move(positions)), homes_(std::move(homes)) {
  if (positions_.empty()) {
    throw ParameterError("population snapshot needs at least one individual");
  }
  if (positions_.size() != homes_.size()) {
    throw ParameterError("snapshot has " + std::to_string(positions_.size()) +
                         " positions but " + std::to_string(homes_.size()) +
                         " homes");
  }
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (!is_finite(positions_[i]) || !is_finite(homes_[i])) {
      throw ParameterError("snapshot individual " + std::to_string(i) +
                           " has a non-finite coordinate");
    }
  }
}

void validate_rule(const ProximityRule& rule, std::size_t n) {
  switch (rule.mode) {
    case ProximityRule::Mode::kFixedCount:
      if (rule.count < 1) {
        throw ParameterError("fixed-count proximity needs C >= 1");
      }
      if (n == 0 || rule.count > n - 1) {
        throw ParameterError("fixed-count proximity C = " +
                             std::to_string(rule.count) +
                             " exceeds N-1 = " +
                             std::to_string(n == 0 ? 0 : n - 1));
      }
      return;
    case ProximityRule::Mode::kRadius:
      if (!(rule.radius > 0.0) || !std::isfinite(rule.radius)) {
        throw ParameterError("radius proximity needs a finite radius > 0");
      }
      return;
  }
}

double pairwise_distance(const Position& a, const Position& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

double step_deviation(const MobilityTrace& trace, std::size_t t) {
  if (t < 1 || t > trace.steps.size()) {
    throw std::out_of_range("timestep " + std::to_string(t) +
                            " outside [1, " +
                            std::to_string(trace.steps.size()) + "]");
  }
  const Position& from = t == 1 ? trace.home : trace.steps[t - 2];
  return pairwise_distance(from, trace.steps[t - 1]);
}

double total_deviation(const MobilityTrace& trace) {
  validate_trace(trace);
  double sum = 0.0;
  for (std::size_t t = 1; t <= trace.steps.size(); ++t) {
    sum += step_deviation(trace, t);
  }
  return sum;
}

std::vector<std::size_t> proximity_set(std::size_t i,
                                       const PopulationSnapshot& snapshot,
                                       const ProximityRule& rule) {
  const std::size_t n = snapshot.size();
  if (i >= n) {
    throw std::out_of_range("individual " + std::to_string(i) +
                            " outside population of " + std::to_string(n));
  }
  validate_rule(rule, n);

  std::vector<Candidate> all;
  all.reserve(n - 1);
  const Position& self = snapshot.position(i);
  for (std::size_t j = 0; j < n; ++j) {
    if (j != i) all.emplace_back(pairwise_distance(self, snapshot.position(j)), j);
  }

  std::vector<std::size_t> out;
  if (rule.mode == ProximityRule::Mode::kFixedCount) {
    const auto cut = all.begin() + static_cast<std::ptrdiff_t>(rule.count);
    std::nth_element(all.begin(), cut - 1, all.end());
    for (auto it = all.begin(); it != cut; ++it) out.push_back(it->second);
  } else {
    for (const auto& [d, j] : all) {
      if (d <= rule.radius) out.push_back(j);
    }
  }
  return by_index(std::move(out));
}

std::vector<std::vector<std::size_t>> proximity_sets(
    const PopulationSnapshot& snapshot, const ProximityRule& rule) {
  const std::size_t n = snapshot.size();
  validate_rule(rule, n);
  const NeighborGrid grid(snapshot.positions());
  std::vector<std::vector<std::size_t>> sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    sets[i] = rule.mode == ProximityRule::Mode::kFixedCount
                  ? by_index(grid.nearest(i, rule.count))
                  : grid.within(i, rule.radius);
  }
  return sets;
}

double aggregate_distance_from(const Position& origin,
                               const PopulationSnapshot& snapshot,
                               std::span<const std::size_t> proximity) {
  double sum = 0.0;
  for (const std::size_t j : proximity) {
    if (j >= snapshot.size()) {
      throw ParameterError("proximity index " + std::to_string(j) +
                           " outside population of " +
                           std::to_string(snapshot.size()));
    }
    sum += pairwise_distance(origin, snapshot.position(j));
  }
  return sum;
}

double aggregate_distance(std::size_t i, const PopulationSnapshot& snapshot,
                          std::span<const std::size_t> proximity) {
  if (i >= snapshot.size()) {
    throw std::out_of_range("individual " + std::to_string(i) +
                            " outside population of " +
                            std::to_string(snapshot.size()));
  }
  if (std::find(proximity.begin(), proximity.end(), i) != proximity.end()) {
    throw ParameterError("individual " + std::to_string(i) +
                         " is listed in its own proximity set");
  }
  return aggregate_distance_from(snapshot.position(i), snapshot, proximity);
}

// ---------------------------------------------------------------------------
// NeighborGrid

NeighborGrid::NeighborGrid(std::span<const Position> points)
    : points_(points.begin(), points.end()) {
  if (points_.empty()) return;
  double max_x = points_[0].x;
  double max_y = points_[0].y;
  min_x_ = points_[0].x;
  min_y_ = points_[0].y;
  for (const Position& p : points_) {
    min_x_ = std::min(min_x_, p.x);
    min_y_ = std::min(min_y_, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  const double span = std::max(max_x - min_x_, max_y - min_y_);
  // Roughly two points per bucket for uniform data.
  const auto per_axis = static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(points_.size()) / 2.0)));
  if (span > 0.0 && per_axis > 1) {
    cell_ = span / static_cast<double>(per_axis);
    nx_ = std::min(per_axis, static_cast<std::size_t>((max_x - min_x_) / cell_)) + 1;
    ny_ = std::min(per_axis, static_cast<std::size_t>((max_y - min_y_) / cell_)) + 1;
  }

  std::vector<std::size_t> bucket(points_.size());
  start_.assign(nx_ * ny_ + 1, 0);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    bucket[i] = cell_of(points_[i].y, min_y_, ny_) * nx_ +
                cell_of(points_[i].x, min_x_, nx_);
    ++start_[bucket[i] + 1];
  }
  for (std::size_t c = 0; c < nx_ * ny_; ++c) start_[c + 1] += start_[c];
  order_.resize(points_.size());
  std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
  for (std::size_t i = 0; i < points_.size(); ++i) order_[fill[bucket[i]]++] = i;
}

std::size_t NeighborGrid::cell_of(double v, double lo,
                                  std::size_t cells) const {
  const double f = (v - lo) / cell_;
  if (!(f > 0.0)) return 0;
  return std::min(cells - 1, static_cast<std::size_t>(f));
}

std::vector<std::size_t> NeighborGrid::nearest(std::size_t self,
                                               std::size_t k) const {
  if (self >= points_.size()) throw std::out_of_range("grid query index");
  if (k == 0) return {};
  const Position q = points_[self];
  const auto cx = static_cast<std::ptrdiff_t>(cell_of(q.x, min_x_, nx_));
  const auto cy = static_cast<std::ptrdiff_t>(cell_of(q.y, min_y_, ny_));
  const auto nx = static_cast<std::ptrdiff_t>(nx_);
  const auto ny = static_cast<std::ptrdiff_t>(ny_);

  // Max-heap on (distance, index): top is the current k-th best.
  std::priority_queue<Candidate> best;
  const auto visit = [&](std::ptrdiff_t gx, std::ptrdiff_t gy) {
    if (gx < 0 || gy < 0 || gx >= nx || gy >= ny) return;
    const auto c = static_cast<std::size_t>(gy * nx + gx);
    for (std::size_t o = start_[c]; o < start_[c + 1]; ++o) {
      const std::size_t j = order_[o];
      if (j == self) continue;
      const Candidate cand{pairwise_distance(q, points_[j]), j};
      if (best.size() < k) {
        best.push(cand);
      } else if (cand < best.top()) {
        best.pop();
        best.push(cand);
      }
    }
  };

  constexpr double kInf = std::numeric_limits<double>::infinity();
  const std::ptrdiff_t max_ring = std::max(nx, ny);
  for (std::ptrdiff_t r = 0; r <= max_ring; ++r) {
    if (r == 0) {
      visit(cx, cy);
    } else {
      for (std::ptrdiff_t gx = cx - r; gx <= cx + r; ++gx) {
        visit(gx, cy - r);
        visit(gx, cy + r);
      }
      for (std::ptrdiff_t gy = cy - r + 1; gy <= cy + r - 1; ++gy) {
        visit(cx - r, gy);
        visit(cx + r, gy);
      }
    }
    // Any point outside the visited square is at least `bound` away.
    double bound = kInf;
    if (cx - r > 0) bound = std::min(bound, q.x - (min_x_ + static_cast<double>(cx - r) * cell_));
    if (cx + r < nx - 1) bound = std::min(bound, min_x_ + static_cast<double>(cx + r + 1) * cell_ - q.x);
    if (cy - r > 0) bound = std::min(bound, q.y - (min_y_ + static_cast<double>(cy - r) * cell_));
    if (cy + r < ny - 1) bound = std::min(bound, min_y_ + static_cast<double>(cy + r + 1) * cell_ - q.y);
    if (bound == kInf) break;
    // Slack absorbs rounding in the bucket assignment.
    bound -= 1e-9 * cell_;
    if (best.size() == k && best.top().first < bound) break;
  }

  std::vector<Candidate> sorted;
  sorted.reserve(best.size());
  while (!best.empty()) {
    sorted.push_back(best.top());
    best.pop();
  }
  std::reverse(sorted.begin(), sorted.end());
  std::vector<std::size_t> out;
  out.reserve(sorted.size());
  for (const auto& c : sorted) out.push_back(c.second);
  return out;
}

std::vector<std::size_t> NeighborGrid::within(std::size_t self,
                                              double r) const {
  if (self >= points_.size()) throw std::out_of_range("grid query index");
  const Position q = points_[self];
  const std::size_t x0 = cell_of(q.x - r, min_x_, nx_);
  const std::size_t x1 = cell_of(q.x + r, min_x_, nx_);
  const std::size_t y0 = cell_of(q.y - r, min_y_, ny_);
  const std::size_t y1 = cell_of(q.y + r, min_y_, ny_);
  std::vector<std::size_t> out;
  for (std::size_t gy = y0; gy <= y1; ++gy) {
    for (std::size_t gx = x0; gx <= x1; ++gx) {
      const std::size_t c = gy * nx_ + gx;
      for (std::size_t o = start_[c]; o < start_[c + 1]; ++o) {
        const std::size_t j = order_[o];
        if (j != self && pairwise_distance(q, points_[j]) <= r) out.push_back(j);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace isogame
