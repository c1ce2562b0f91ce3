#include "mule/noon_bean.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

#include "mule/error.hpp"

namespace mule {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

NoonBeanResult transform(const GtspGraph& graph) {
  const int nv = graph.num_vertices();
  const int m = graph.levels();

  NoonBeanResult out;
  out.cycle_next.assign(static_cast<std::size_t>(nv), 0);
  out.cycle_next[GtspGraph::kDepot] = GtspGraph::kDepot;  // singleton cluster
  for (int site = 1; site <= graph.num_sites(); ++site) {
    for (int level = 1; level <= m; ++level) {
      out.cycle_next[static_cast<std::size_t>(graph.vertex(site, level))] =
          graph.vertex(site, level % m + 1);
    }
  }

  double finite_sum = 0.0;
  for (VertexId u = 0; u < nv; ++u) {
    for (VertexId v = 0; v < nv; ++v) {
      if (graph.cluster_of(u) == graph.cluster_of(v)) continue;
      if (const auto e = graph.edge(u, v)) finite_sum += e->cost;
    }
  }
  out.penalty = 1.0 + finite_sum;

  out.tsp.cost.assign(static_cast<std::size_t>(nv),
                      std::vector<double>(static_cast<std::size_t>(nv), kInf));
  for (VertexId u = 0; u < nv; ++u) {
    const VertexId shifted = out.cycle_next[static_cast<std::size_t>(u)];
    for (VertexId v = 0; v < nv; ++v) {
      if (u == v) continue;
      if (graph.cluster_of(u) == graph.cluster_of(v)) {
        if (v == shifted) out.tsp.cost[u][v] = 0.0;
        continue;
      }
      if (const auto e = graph.edge(shifted, v)) out.tsp.cost[u][v] = e->cost + out.penalty;
    }
  }
  return out;
}

std::vector<VertexId> solve_tsp(const TspGraph& tsp, const TspSolveConfig& config) {
  const int nv = tsp.num_vertices();
  if (nv > config.max_vertices) {
    std::ostringstream msg;
    msg << "tsp solver capped at " << config.max_vertices << " vertices, graph has " << nv;
    throw Error(ErrorCode::SizeCap, msg.str());
  }
  if (nv == 0) throw Error(ErrorCode::Infeasible, "empty tsp graph");
  if (nv == 1) return {0};

  // dp over subsets of vertices 1..nv-1, path anchored at vertex 0.
  const int rest = nv - 1;
  const std::size_t masks = std::size_t(1) << rest;
  std::vector<double> dp(masks * static_cast<std::size_t>(rest), kInf);
  std::vector<std::int32_t> parent(masks * static_cast<std::size_t>(rest), -1);
  const auto at = [rest](std::uint32_t mask, int v) {
    return static_cast<std::size_t>(mask) * rest + static_cast<std::size_t>(v - 1);
  };

  for (int v = 1; v < nv; ++v) {
    dp[at(1u << (v - 1), v)] = tsp.cost[0][static_cast<std::size_t>(v)];
  }
  const std::uint32_t full = (1u << rest) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (int v = 1; v < nv; ++v) {
      if (!((mask >> (v - 1)) & 1u)) continue;
      const double cur = dp[at(mask, v)];
      if (!(cur < kInf)) continue;
      for (int w = 1; w < nv; ++w) {
        if ((mask >> (w - 1)) & 1u) continue;
        const double arc = tsp.cost[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
        if (!(arc < kInf)) continue;
        const std::size_t target = at(mask | (1u << (w - 1)), w);
        if (cur + arc < dp[target]) {
          dp[target] = cur + arc;
          parent[target] = v;
        }
      }
    }
  }

  double best = kInf;
  int best_end = -1;
  for (int v = 1; v < nv; ++v) {
    const double back = tsp.cost[static_cast<std::size_t>(v)][0];
    if (!(back < kInf)) continue;
    const double cand = dp[at(full, v)] + back;
    if (cand < best) {
      best = cand;
      best_end = v;
    }
  }
  if (!(best < kInf)) throw Error(ErrorCode::Infeasible, "no hamiltonian cycle in tsp graph");

  std::vector<VertexId> reversed;
  std::uint32_t mask = full;
  for (int v = best_end; v != -1;) {
    reversed.push_back(v);
    const int prev = parent[at(mask, v)];
    mask ^= 1u << (v - 1);
    v = prev;
  }
  std::vector<VertexId> cycle;
  cycle.reserve(static_cast<std::size_t>(nv));
  cycle.push_back(0);
  cycle.insert(cycle.end(), reversed.rbegin(), reversed.rend());
  return cycle;
}

GtspTour lift_tour(const std::vector<VertexId>& tsp_tour, const NoonBeanResult& nb,
                   const GtspGraph& graph) {
  (void)nb;
  if (tsp_tour.size() != static_cast<std::size_t>(graph.num_vertices()))
    throw Error(ErrorCode::Malformed, "tsp tour does not cover every vertex exactly once");

  // Rotate so the cycle starts at the depot; it is a singleton cluster, so
  // runs can no longer wrap around the ends.
  const auto depot_pos = std::find(tsp_tour.begin(), tsp_tour.end(), GtspGraph::kDepot);
  if (depot_pos == tsp_tour.end())
    throw Error(ErrorCode::Malformed, "tsp tour is missing the depot vertex");
  std::vector<VertexId> rotated;
  rotated.reserve(tsp_tour.size());
  rotated.insert(rotated.end(), depot_pos, tsp_tour.end());
  rotated.insert(rotated.end(), tsp_tour.begin(), depot_pos);

  std::vector<int> runs(static_cast<std::size_t>(graph.num_clusters()), 0);
  std::vector<VertexId> entries;
  int prev_cluster = -1;
  for (const VertexId v : rotated) {
    const int cluster = graph.cluster_of(v);
    if (cluster != prev_cluster) {
      runs[static_cast<std::size_t>(cluster)] += 1;
      entries.push_back(v);
      prev_cluster = cluster;
    }
  }
  for (int c = 0; c < graph.num_clusters(); ++c) {
    if (runs[static_cast<std::size_t>(c)] != 1) {
      std::ostringstream msg;
      msg << "cluster " << c << " is visited non-contiguously in the tsp tour";
      throw Error(ErrorCode::Malformed, msg.str());
    }
  }

  GtspTour tour;
  tour.vertices = std::move(entries);
  tour.vertices.push_back(GtspGraph::kDepot);
  tour.cost = recompute_tour_cost(tour, graph);
  return tour;
}

}  // namespace mule
