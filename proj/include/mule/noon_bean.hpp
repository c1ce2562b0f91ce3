#pragma once

#include <vector>

#include "mule/tour.hpp"

namespace mule {

// Dense asymmetric TSP cost matrix; +infinity marks a missing arc.
struct TspGraph {
  std::vector<std::vector<double>> cost;

  int num_vertices() const { return static_cast<int>(cost.size()); }
};

struct NoonBeanResult {
  TspGraph tsp;
  double penalty = 0.0;                // added to every inter-cluster arc
  std::vector<VertexId> cycle_next;    // intra-cluster successor per vertex
};

// Cluster-to-TSP reduction. Each cluster's vertices are wired into a
// zero-cost directed cycle (ascending battery level; singleton clusters map
// to themselves), and the inter-cluster arc (u -> v) takes the original
// cost of (cycle_next(u) -> v) plus a penalty M = 1 + sum of all finite
// inter-cluster costs. With that shift, an optimal TSP tour walks each
// cluster contiguously and pays, per cluster, the original cost out of the
// vertex where it entered — so optimal TSP cost = optimal cluster-tour cost
// + (number of clusters) * M.
NoonBeanResult transform(const GtspGraph& graph);

struct TspSolveConfig {
  int max_vertices = 18;
};

// Optimal directed Hamiltonian cycle by subset dynamic programming,
// reported starting at vertex 0. Throws Error(SizeCap) over the cap and
// Error(Infeasible) when no finite cycle exists.
std::vector<VertexId> solve_tsp(const TspGraph& tsp, const TspSolveConfig& config = {});

// Maps a TSP cycle back to a cluster tour: rotate to the depot, take the
// entry vertex of every contiguous cluster run, and recost the result on
// the original graph. Throws Error(Malformed) if any cluster is visited
// non-contiguously.
GtspTour lift_tour(const std::vector<VertexId>& tsp_tour, const NoonBeanResult& nb,
                   const GtspGraph& graph);

}  // namespace mule
