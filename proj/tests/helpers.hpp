#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "mule/instance.hpp"
#include "mule/mmcs.hpp"
#include "mule/noon_bean.hpp"

namespace mule::testing {

inline ProblemInstance make_instance(const std::vector<Point>& site_positions,
                                     const Point& depot = {0.0, 0.0}) {
  ProblemInstance inst;
  inst.depot = depot;
  int id = 0;
  for (const Point& p : site_positions) inst.sites.push_back({++id, p});
  return inst;
}

// Cheapest order to overfly every site once, by full enumeration. Depot
// legs are free in the tour model, so only site-to-site flight time counts.
inline double cheapest_overflight_path(const ProblemInstance& inst) {
  const int n = inst.num_sites();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  double best = std::numeric_limits<double>::infinity();
  do {
    double cost = 0.0;
    for (int i = 0; i + 1 < n; ++i)
      cost += inst.uav_time(order[static_cast<std::size_t>(i)],
                            order[static_cast<std::size_t>(i + 1)]);
    best = std::min(best, cost);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

// Optimal directed cycle cost through every vertex of a dense matrix, by
// enumerating the orders of vertices 1..n-1 around fixed vertex 0.
inline double cheapest_cycle_by_enumeration(const TspGraph& tsp) {
  const int n = tsp.num_vertices();
  if (n == 1) return 0.0;
  std::vector<int> order(static_cast<std::size_t>(n - 1));
  std::iota(order.begin(), order.end(), 1);
  double best = std::numeric_limits<double>::infinity();
  do {
    double cost = tsp.cost[0][static_cast<std::size_t>(order.front())];
    for (int i = 0; i + 1 < n - 1; ++i)
      cost += tsp.cost[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]
                      [static_cast<std::size_t>(order[static_cast<std::size_t>(i + 1)])];
    cost += tsp.cost[static_cast<std::size_t>(order.back())][0];
    best = std::min(best, cost);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

// Random scheduling instance with self-consistent clocks: duty q happens
// clock[q] - clock[p] after duty p, vehicles drive between random points.
// Some consecutive duty pairs are welded, like rides in a real plan.
inline MmcsInstance random_mmcs_instance(std::mt19937_64& rng, int duties,
                                         double forced_probability = 0.3) {
  std::uniform_real_distribution<double> gap(1.0, 100.0);
  std::uniform_real_distribution<double> coord(0.0, 300.0);
  std::uniform_real_distribution<double> speed_dist(0.5, 4.0);
  std::bernoulli_distribution weld(forced_probability);

  std::vector<double> clock(static_cast<std::size_t>(duties), 0.0);
  for (int i = 1; i < duties; ++i)
    clock[static_cast<std::size_t>(i)] = clock[static_cast<std::size_t>(i - 1)] + gap(rng);
  std::vector<Point> where(static_cast<std::size_t>(duties));
  for (Point& p : where) p = {coord(rng), coord(rng)};
  const double speed = speed_dist(rng);

  MmcsInstance inst;
  inst.charging_sites.resize(static_cast<std::size_t>(duties));
  std::iota(inst.charging_sites.begin(), inst.charging_sites.end(), 1);
  const auto l = static_cast<std::size_t>(duties);
  inst.uav_elapsed_flat.assign(l * l, 0.0);
  inst.ugv_direct_flat.assign(l * l, 0.0);
  for (std::size_t p = 0; p < l; ++p) {
    for (std::size_t q = 0; q < l; ++q) {
      inst.uav_elapsed_flat[p * l + q] = clock[q] - clock[p];
      inst.ugv_direct_flat[p * l + q] = distance(where[p], where[q]) / speed;
    }
  }
  for (int i = 0; i + 1 < duties; ++i) {
    if (weld(rng)) inst.forced_edges.emplace_back(i, i + 1);
  }
  return inst;
}

}  // namespace mule::testing
