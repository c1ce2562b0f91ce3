#include "mule/alns.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>

#include "mule/error.hpp"

namespace mule {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double edge_cost_or_inf(const GtspGraph& graph, VertexId u, VertexId v) {
  const auto e = graph.edge(u, v);
  return e ? e->cost : kInf;
}

double chain_cost(const GtspGraph& graph, const std::vector<VertexId>& chain) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    total += edge_cost_or_inf(graph, chain[i], chain[i + 1]);
  }
  return total;
}

// Lowest battery level of `site` reachable from vertex u, or 0 if none.
int lowest_entry_level(const GtspGraph& graph, VertexId u, int site) {
  for (int level = 1; level <= graph.levels(); ++level) {
    if (graph.edge(u, graph.vertex(site, level))) return level;
  }
  return 0;
}

// Left-to-right pass restoring the "every consecutive pair has an edge"
// invariant after removals: broken right-hand vertices are re-leveled to
// the lowest level reachable from their left neighbor, or as a last resort
// their cluster is dropped from the chain as well.
void repair_chain(const GtspGraph& graph, std::vector<VertexId>& chain,
                  std::vector<int>& extra_removed) {
  std::size_t p = 1;
  while (p < chain.size()) {
    const VertexId u = chain[p - 1];
    const VertexId w = chain[p];
    if (w == GtspGraph::kDepot || graph.edge(u, w)) {
      ++p;
      continue;
    }
    const int level = lowest_entry_level(graph, u, graph.site_of(w));
    if (level > 0) {
      chain[p] = graph.vertex(graph.site_of(w), level);
      ++p;
    } else {
      extra_removed.push_back(graph.site_of(w));
      chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(p));
    }
  }
}

struct OperatorStats {
  double weight = 1.0;
  double score = 0.0;
  int uses = 0;
};

std::vector<int> site_order_of(const GtspGraph& graph, const GtspTour& tour) {
  std::vector<int> order;
  order.reserve(tour.vertices.size());
  for (const VertexId v : tour.vertices) {
    if (v != GtspGraph::kDepot) order.push_back(graph.site_of(v));
  }
  return order;
}

// Cheapest leveling of a fixed visit order: a forward pass over battery
// levels, entering the first site fully charged. Empty if no leveling works.
std::optional<GtspTour> best_leveling(const GtspGraph& graph, const std::vector<int>& order) {
  const int m = graph.levels();
  const std::size_t steps = order.size();
  if (steps == 0) return std::nullopt;

  std::vector<double> cur(static_cast<std::size_t>(m) + 1, kInf);
  cur[static_cast<std::size_t>(m)] = 0.0;
  std::vector<int> from(steps * static_cast<std::size_t>(m + 1), -1);
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
          from[t * (m + 1) + kp] = k;
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
  if (!(best < kInf)) return std::nullopt;

  GtspTour out;
  out.vertices.assign(steps + 2, GtspGraph::kDepot);
  int level = best_level;
  for (std::size_t t = steps; t-- > 0;) {
    out.vertices[t + 1] = graph.vertex(order[t], level);
    if (t > 0) level = from[t * (m + 1) + level];
  }
  out.cost = best;
  return out;
}

}  // namespace

GtspTour initial_tour(const GtspGraph& graph, std::uint64_t seed) {
  const int n = graph.num_sites();
  std::mt19937_64 rng(seed);

  std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
  PartialTour partial;
  partial.chain = {GtspGraph::kDepot, GtspGraph::kDepot};

  // All depot edges cost the same, so the first stop is the seed's pick.
  const int first = std::uniform_int_distribution<int>(1, n)(rng);
  partial.chain.insert(partial.chain.begin() + 1, graph.vertex(first, graph.levels()));
  visited[static_cast<std::size_t>(first)] = true;

  bool stuck = false;
  for (int step = 1; step < n; ++step) {
    const VertexId tail = partial.chain[partial.chain.size() - 2];
    double best = kInf;
    VertexId best_vertex = -1;
    for (int site = 1; site <= n; ++site) {
      if (visited[static_cast<std::size_t>(site)]) continue;
      for (int level = 1; level <= graph.levels(); ++level) {
        const VertexId v = graph.vertex(site, level);
        const auto e = graph.edge(tail, v);
        if (!e) continue;
        if (e->cost < best || (e->cost == best && v < best_vertex)) {
          best = e->cost;
          best_vertex = v;
        }
      }
    }
    if (best_vertex < 0) {
      stuck = true;
      break;
    }
    partial.chain.insert(partial.chain.end() - 1, best_vertex);
    visited[static_cast<std::size_t>(graph.site_of(best_vertex))] = true;
  }

  if (!stuck) {
    GtspTour tour;
    tour.vertices = std::move(partial.chain);
    tour.cost = chain_cost(graph, tour.vertices);
    return tour;
  }

  // Sparse edge masks can strand the greedy pass even when tours exist.
  // Fall back to random visit orders, each leveled optimally.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::shuffle(order.begin(), order.end(), rng);
    if (const auto tour = best_leveling(graph, order)) return *tour;
  }
  throw Error(ErrorCode::Infeasible, "could not construct a feasible starting tour");
}

std::pair<PartialTour, std::vector<int>> remove_clusters(const GtspTour& tour,
                                                         const GtspGraph& graph, int count,
                                                         RemovalOp op, std::mt19937_64& rng) {
  const std::size_t len = tour.vertices.size();
  const int sites_in_tour = static_cast<int>(len) - 2;
  count = std::clamp(count, 1, sites_in_tour);

  std::vector<std::size_t> positions;  // positions of site vertices: 1..len-2
  switch (op) {
    case RemovalOp::Random: {
      std::vector<std::size_t> all(static_cast<std::size_t>(sites_in_tour));
      std::iota(all.begin(), all.end(), std::size_t{1});
      for (int k = 0; k < count; ++k) {
        const std::size_t pick = std::uniform_int_distribution<std::size_t>(
            static_cast<std::size_t>(k), all.size() - 1)(rng);
        std::swap(all[static_cast<std::size_t>(k)], all[pick]);
        positions.push_back(all[static_cast<std::size_t>(k)]);
      }
      break;
    }
    case RemovalOp::Segment: {
      const std::size_t start = std::uniform_int_distribution<std::size_t>(
          1, static_cast<std::size_t>(sites_in_tour - count) + 1)(rng);
      for (int k = 0; k < count; ++k) positions.push_back(start + static_cast<std::size_t>(k));
      break;
    }
    case RemovalOp::WorstEdge: {
      // Rank tour legs by cost and pull out the clusters touching the worst
      // ones, skipping each leg with a little randomness for diversity.
      std::vector<std::size_t> legs(len - 1);
      std::iota(legs.begin(), legs.end(), std::size_t{0});
      std::vector<double> costs(len - 1);
      for (std::size_t i = 0; i + 1 < len; ++i)
        costs[i] = edge_cost_or_inf(graph, tour.vertices[i], tour.vertices[i + 1]);
      std::stable_sort(legs.begin(), legs.end(),
                       [&costs](std::size_t a, std::size_t b) { return costs[a] > costs[b]; });
      std::vector<bool> taken(len, false);
      std::bernoulli_distribution skip(0.3);
      for (int round = 0; round < 2 && static_cast<int>(positions.size()) < count; ++round) {
        for (const std::size_t leg : legs) {
          if (static_cast<int>(positions.size()) >= count) break;
          if (round == 0 && skip(rng)) continue;
          for (const std::size_t p : {leg, leg + 1}) {
            if (static_cast<int>(positions.size()) >= count) break;
            if (p == 0 || p == len - 1 || taken[p]) continue;
            taken[p] = true;
            positions.push_back(p);
          }
        }
      }
      break;
    }
  }

  std::vector<bool> remove_at(len, false);
  std::vector<int> removed;
  for (const std::size_t p : positions) {
    remove_at[p] = true;
    removed.push_back(graph.site_of(tour.vertices[p]));
  }

  PartialTour partial;
  partial.chain.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (!remove_at[i]) partial.chain.push_back(tour.vertices[i]);
  }
  repair_chain(graph, partial.chain, removed);
  return {std::move(partial), std::move(removed)};
}

bool insert_cluster(PartialTour& partial, const GtspGraph& graph, int cluster,
                    std::mt19937_64& rng, double noise) {
  double best_key = kInf;
  std::size_t best_pos = 0;
  VertexId best_vertex = -1;

  for (std::size_t p = 1; p < partial.chain.size(); ++p) {
    const VertexId u = partial.chain[p - 1];
    const VertexId w = partial.chain[p];
    const double base = (u == GtspGraph::kDepot && w == GtspGraph::kDepot)
                            ? 0.0
                            : edge_cost_or_inf(graph, u, w);
    for (int level = 1; level <= graph.levels(); ++level) {
      const VertexId v = graph.vertex(cluster, level);
      const auto in = graph.edge(u, v);
      if (!in) continue;
      const auto out = graph.edge(v, w);
      if (!out) continue;
      const double delta = in->cost + out->cost - base;
      double key = delta;
      if (noise > 0.0) {
        key *= 1.0 + noise * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      }
      if (key < best_key) {
        best_key = key;
        best_pos = p;
        best_vertex = v;
      }
    }
  }

  if (best_vertex < 0) return false;
  partial.chain.insert(partial.chain.begin() + static_cast<std::ptrdiff_t>(best_pos),
                       best_vertex);
  return true;
}

GtspTour reoptimize_levels(const GtspTour& tour, const GtspGraph& graph) {
  const auto releveled = best_leveling(graph, site_order_of(graph, tour));
  if (!releveled || releveled->cost >= tour.cost) return tour;
  return *releveled;
}

HeuristicResult solve_heuristic(const GtspGraph& graph, const SearchConfig& config) {
  if (config.max_iterations < 1)
    throw Error(ErrorCode::Validation, "heuristic budget must be at least one iteration");
  if (!(config.cooling_rate > 0.0) || config.cooling_rate > 1.0)
    throw Error(ErrorCode::Validation, "cooling rate must lie in (0, 1]");
  if (config.removal_min_fraction > config.removal_max_fraction)
    throw Error(ErrorCode::Validation, "removal fractions out of order");

  const auto start_time = std::chrono::steady_clock::now();
  const auto out_of_time = [&]() {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_time;
    return elapsed.count() >= config.time_limit_seconds;
  };

  std::mt19937_64 rng(config.seed);
  const int n = graph.num_sites();

  GtspTour current = initial_tour(graph, config.seed);
  current = reoptimize_levels(current, graph);
  GtspTour best = current;

  // Keep the band at least two wide (when the tour allows it): single-cluster
  // relocation alone cannot escape its own local optima.
  const int remove_lo = std::max(1, static_cast<int>(config.removal_min_fraction * n));
  const int remove_hi =
      std::clamp(static_cast<int>(std::ceil(config.removal_max_fraction * n)),
                 std::min(n, remove_lo + 1), n);

  OperatorStats ops[3];
  const RemovalOp op_ids[3] = {RemovalOp::Random, RemovalOp::Segment, RemovalOp::WorstEdge};

  // Accept-everything warmup while collecting uphill deltas, then set the
  // start temperature so the median uphill move is a coin flip.
  const std::int64_t warmup =
      config.initial_temperature > 0.0 ? 0 : std::min<std::int64_t>(100, config.max_iterations);
  std::vector<double> uphill;
  double temperature = config.initial_temperature;

  HeuristicResult result;
  std::int64_t iter = 0;
  for (; iter < config.max_iterations; ++iter) {
    if (out_of_time()) {
      result.hit_time_limit = true;
      break;
    }

    // Pick a destroy operator by roulette over adaptive weights.
    const double total_weight = ops[0].weight + ops[1].weight + ops[2].weight;
    double roll = std::uniform_real_distribution<double>(0.0, total_weight)(rng);
    int op = 0;
    while (op < 2 && roll >= ops[op].weight) {
      roll -= ops[op].weight;
      ++op;
    }
    ops[op].uses += 1;

    const int count = std::uniform_int_distribution<int>(remove_lo, remove_hi)(rng);
    auto [partial, removed] = remove_clusters(current, graph, count, op_ids[op], rng);
    std::shuffle(removed.begin(), removed.end(), rng);

    bool rebuilt = true;
    for (const int cluster : removed) {
      if (!insert_cluster(partial, graph, cluster, rng, config.insertion_noise)) {
        rebuilt = false;
        break;
      }
    }
    if (!rebuilt) continue;  // keep the incumbent, try a different move

    GtspTour candidate;
    candidate.vertices = std::move(partial.chain);
    candidate.cost = chain_cost(graph, candidate.vertices);
    // Evaluate the rebuilt visit order at its best possible leveling, so a
    // good order is never thrown away over sloppy insertion levels.
    candidate = reoptimize_levels(candidate, graph);

    const double delta = candidate.cost - current.cost;
    bool accepted = false;
    if (delta < 0.0) {
      accepted = true;
    } else if (iter < warmup) {
      accepted = true;
      if (delta > 0.0) uphill.push_back(delta);
    } else if (temperature > 0.0) {
      accepted = std::uniform_real_distribution<double>(0.0, 1.0)(rng) <
                 std::exp(-delta / temperature);
    }

    if (iter + 1 == warmup || (iter < warmup && iter + 1 == config.max_iterations)) {
      if (temperature <= 0.0) {
        if (!uphill.empty()) {
          std::nth_element(uphill.begin(), uphill.begin() + uphill.size() / 2, uphill.end());
          temperature = uphill[uphill.size() / 2] / std::log(2.0);
        } else {
          temperature = std::max(1e-6, 1e-4 * best.cost);
        }
      }
    }

    const bool new_best = candidate.cost < best.cost - 1e-12;
    if (new_best) best = candidate;
    if (accepted) current = candidate;

    OperatorStats& stats = ops[op];
    if (new_best) {
      stats.score += config.score_global_best;
    } else if (delta < 0.0) {
      stats.score += config.score_improving;
    } else if (accepted) {
      stats.score += config.score_accepted;
    }

    if (iter >= warmup && temperature > 0.0) {
      temperature = std::max(temperature * config.cooling_rate, 1e-9);
    }

    if ((iter + 1) % config.adaptation_period == 0) {
      for (OperatorStats& s : ops) {
        if (s.uses > 0) {
          s.weight = (1.0 - config.reaction_factor) * s.weight +
                     config.reaction_factor * (s.score / s.uses);
          s.weight = std::max(s.weight, 0.01);
        }
        s.score = 0.0;
        s.uses = 0;
      }
    }
  }

  result.tour = reoptimize_levels(best, graph);
  result.iterations = iter;
  return result;
}

}  // namespace mule
