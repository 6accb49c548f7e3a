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


#ifndef ISOGAME_TESTS_ORACLES_HPP_
#define ISOGAME_TESTS_ORACLES_HPP_

// Reference computations for the tests. Deliberately naive and written
// without calling into the library's own helpers.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "isogame/geometry.hpp"

namespace isogame::oracle {

// Plain sqrt(dx^2 + dy^2) so exact-value comparisons see the same rounding
// as any straightforward implementation.
inline double dist(const Position& a, const Position& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

// C nearest others of i by full sort on (distance, index), returned in
// ascending index order.
inline std::vector<std::size_t> knn_by_sort(const std::vector<Position>& pts,
                                            std::size_t i, std::size_t c) {
  std::vector<std::pair<double, std::size_t>> all;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (j != i) all.emplace_back(dist(pts[i], pts[j]), j);
  }
  std::sort(all.begin(), all.end());
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < c && k < all.size(); ++k) out.push_back(all[k].second);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::size_t> radius_scan(const std::vector<Position>& pts,
                                            std::size_t i, double r) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (j != i && dist(pts[i], pts[j]) <= r) out.push_back(j);
  }
  return out;
}

inline double path_length(const Position& home,
                          const std::vector<Position>& steps) {
  double total = 0.0;
  Position prev = home;
  for (const Position& p : steps) {
    total += dist(prev, p);
    prev = p;
  }
  return total;
}

inline double home_payoff(double alpha, double beta, double z, double d) {
  return alpha * std::log(z) + beta * std::log(d);
}

inline double move_payoff(double alpha, double beta, double z, double delta,
                          double d) {
  return alpha * std::log(z - delta) + beta * std::log(d);
}

// Right-continuous ecdf evaluated by counting.
inline double ecdf_at(const std::vector<double>& samples, double x) {
  const auto k = std::count_if(samples.begin(), samples.end(),
                               [x](double v) { return v <= x; });
  return static_cast<double>(k) / static_cast<double>(samples.size());
}

inline double lockdown_days(double r0, double u, double r) {
  return r0 / (u - r);
}

// Day-by-day budget walk for constant payout u and collection r.
inline bool affordable(double r0, double u, double r, std::uint64_t days) {
  const double p = static_cast<double>(days);
  return p * u <= r0 + p * r;
}

// Exhaustive grid scan for one or two individuals, each reaching its grid
// point in one step from home. Returns -inf when nothing qualifies.
struct TinyScan {
  std::vector<Position> homes;
  double side = 1000.0;
  std::size_t k = 5;
  double omega = 0.5;
  double z = 1400.0;
  double delta_max = 500.0;
  double d_min = 2.0;
  bool constrained = true;
};

inline double scan_term(const TinyScan& s, const Position& home,
                        const Position& at, double d, bool* ok) {
  const double delta = dist(home, at);
  double t = 0.0;
  if (s.omega > 0.0) {
    if (!(s.z - delta > 0.0)) {
      *ok = false;
      return 0.0;
    }
    t += s.omega * std::log(s.z - delta);
  }
  if (s.omega < 1.0) {
    if (!(d > 0.0)) {
      *ok = false;
      return 0.0;
    }
    t += (1.0 - s.omega) * std::log(d);
  }
  return t;
}

inline double tiny_scan_optimum(const TinyScan& s) {
  std::vector<Position> grid;
  const double step = s.side / static_cast<double>(s.k - 1);
  for (std::size_t ix = 0; ix < s.k; ++ix) {
    for (std::size_t iy = 0; iy < s.k; ++iy) {
      grid.push_back({static_cast<double>(ix) * step,
                      static_cast<double>(iy) * step});
    }
  }
  double best = -std::numeric_limits<double>::infinity();
  if (s.homes.size() == 1) {
    for (const Position& a : grid) {
      if (s.constrained && dist(s.homes[0], a) > s.delta_max) continue;
      bool ok = true;
      const double v = scan_term(s, s.homes[0], a, 0.0, &ok);
      if (ok) best = std::max(best, v);
    }
    return best;
  }
  for (const Position& a : grid) {
    for (const Position& b : grid) {
      const double dab = dist(a, b);
      if (s.constrained) {
        if (dist(s.homes[0], a) > s.delta_max) continue;
        if (dist(s.homes[1], b) > s.delta_max) continue;
        if (dab < s.d_min) continue;
      }
      bool ok = true;
      const double va = scan_term(s, s.homes[0], a, dab, &ok);
      const double vb = scan_term(s, s.homes[1], b, dab, &ok);
      if (ok) best = std::max(best, std::min(va, vb));
    }
  }
  return best;
}

// Seeded point cloud in [0, side)^2 drawn with the standard distribution,
// independent of the library's Rng.
inline std::vector<Position> random_points(std::mt19937_64& gen, std::size_t n,
                                           double side) {
  std::uniform_real_distribution<double> u(0.0, side);
  std::vector<Position> pts(n);
  for (Position& p : pts) p = {u(gen), u(gen)};
  return pts;
}

inline double rel_err(double got, double want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

}  // namespace isogame::oracle

#endif  // ISOGAME_TESTS_ORACLES_HPP_
