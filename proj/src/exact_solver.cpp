#include "mule/exact_solver.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>

#include "mule/error.hpp"

namespace mule {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

GtspTour solve_exact_dp(const GtspGraph& graph, const ExactConfig& config) {
  const int n = graph.num_sites();
  const int m = graph.levels();
  if (graph.num_clusters() > config.max_clusters) {
    std::ostringstream msg;
    msg << "exact solver capped at " << config.max_clusters << " clusters, instance has "
        << graph.num_clusters();
    throw Error(ErrorCode::SizeCap, msg.str());
  }
  const std::size_t nv = static_cast<std::size_t>(n) * m;  // site vertices, ids 1..n*m
  const std::size_t states = (std::size_t(1) << n) * nv;
  if (states > config.max_states) {
    std::ostringstream msg;
    msg << "exact solver state table would need " << states << " entries (cap "
        << config.max_states << "); lower n or m";
    throw Error(ErrorCode::SizeCap, msg.str());
  }

  // dp[mask * nv + (v-1)] = cheapest path depot -> ... -> v covering exactly
  // the site clusters in mask, one vertex each.
  std::vector<double> dp(states, kInf);
  std::vector<std::int32_t> parent(states, -1);
  const auto at = [nv](std::uint32_t mask, VertexId v) {
    return static_cast<std::size_t>(mask) * nv + static_cast<std::size_t>(v - 1);
  };

  for (int i = 1; i <= n; ++i) {
    // Leaving the depot costs nothing but requires a full battery.
    dp[at(1u << (i - 1), graph.vertex(i, m))] = 0.0;
  }

  const std::uint32_t full = (n == 31) ? 0x7fffffffu : (1u << n) - 1;
  const VertexId last = static_cast<VertexId>(nv);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (VertexId v = 1; v <= last; ++v) {
      const int cv = graph.site_of(v);
      if (!((mask >> (cv - 1)) & 1u)) continue;
      const double cur = dp[at(mask, v)];
      if (!(cur < kInf)) continue;
      for (VertexId w = 1; w <= last; ++w) {
        const int cw = graph.site_of(w);
        if ((mask >> (cw - 1)) & 1u) continue;
        const auto e = graph.edge(v, w);
        if (!e) continue;
        const std::size_t target = at(mask | (1u << (cw - 1)), w);
        const double cand = cur + e->cost;
        if (cand < dp[target]) {
          dp[target] = cand;
          parent[target] = v;
        }
      }
    }
  }

  // Returning to the depot is free from any vertex.
  double best = kInf;
  VertexId best_end = -1;
  for (VertexId v = 1; v <= last; ++v) {
    const double c = dp[at(full, v)];
    if (c < best) {
      best = c;
      best_end = v;
    }
  }
  if (!(best < kInf)) throw Error(ErrorCode::Infeasible, "no feasible tour in this graph");

  std::vector<VertexId> reversed;
  std::uint32_t mask = full;
  for (VertexId v = best_end; v != -1;) {
    reversed.push_back(v);
    const VertexId prev = parent[at(mask, v)];
    mask ^= 1u << (graph.site_of(v) - 1);
    v = prev;
  }

  GtspTour tour;
  tour.vertices.reserve(reversed.size() + 2);
  tour.vertices.push_back(GtspGraph::kDepot);
  tour.vertices.insert(tour.vertices.end(), reversed.rbegin(), reversed.rend());
  tour.vertices.push_back(GtspGraph::kDepot);
  tour.cost = best;
  return tour;
}

namespace {

// Cheapest level assignment for a fixed site order: relax cluster by
// cluster over the m level choices. Returns infinity when the order cannot
// be flown. Fills chosen_levels when an output vector is supplied.
double relax_levels(const GtspGraph& graph, const std::vector<int>& order,
                    std::vector<int>* chosen_levels) {
  const int m = graph.levels();
  const std::size_t steps = order.size();
  std::vector<double> cur(static_cast<std::size_t>(m) + 1, kInf);
  cur[static_cast<std::size_t>(m)] = 0.0;  // depot hands over a full battery
  std::vector<std::int16_t> from;          // per step, per level: predecessor level
  if (chosen_levels) from.assign(steps * static_cast<std::size_t>(m + 1), -1);

  for (std::size_t t = 1; t < steps; ++t) {
    std::vector<double> next(static_cast<std::size_t>(m) + 1, kInf);
    for (int kp = 1; kp <= m; ++kp) {
      const VertexId to = graph.vertex(order[t], kp);
      for (int k = 1; k <= m; ++k) {
        if (!(cur[static_cast<std::size_t>(k)] < kInf)) continue;
        const auto e = graph.edge(graph.vertex(order[t - 1], k), to);
        if (!e) continue;
        const double cand = cur[static_cast<std::size_t>(k)] + e->cost;
        if (cand < next[static_cast<std::size_t>(kp)]) {
          next[static_cast<std::size_t>(kp)] = cand;
          if (chosen_levels) from[t * (m + 1) + kp] = static_cast<std::int16_t>(k);
        }
      }
    }
    cur = std::move(next);
  }

  double best = kInf;
  int best_level = -1;
  for (int k = 1; k <= m; ++k) {
    if (cur[static_cast<std::size_t>(k)] < best) {
      best = cur[static_cast<std::size_t>(k)];
      best_level = k;
    }
  }
  if (chosen_levels && best < kInf) {
    chosen_levels->assign(steps, 0);
    int level = best_level;
    for (std::size_t t = steps; t-- > 0;) {
      (*chosen_levels)[t] = level;
      if (t > 0) level = from[t * (m + 1) + level];
    }
  }
  return best;
}

}  // namespace

GtspTour brute_force_oracle(const GtspGraph& graph) {
  const int n = graph.num_sites();
  if (n > 8) {
    std::ostringstream msg;
    msg << "brute-force oracle capped at 8 sites, instance has " << n;
    throw Error(ErrorCode::SizeCap, msg.str());
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);

  double best = kInf;
  std::vector<int> best_order;
  do {
    const double value = relax_levels(graph, order, nullptr);
    if (value < best) {
      best = value;
      best_order = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));

  if (!(best < kInf)) throw Error(ErrorCode::Infeasible, "no feasible tour in this graph");

  std::vector<int> levels;
  relax_levels(graph, best_order, &levels);

  GtspTour tour;
  tour.vertices.push_back(GtspGraph::kDepot);
  for (std::size_t t = 0; t < best_order.size(); ++t) {
    tour.vertices.push_back(graph.vertex(best_order[t], levels[t]));
  }
  tour.vertices.push_back(GtspGraph::kDepot);
  tour.cost = best;
  return tour;
}

}  // namespace mule
