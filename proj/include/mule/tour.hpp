#pragma once

#include <string>
#include <vector>

#include "mule/gtsp_graph.hpp"

namespace mule {

// Closed tour visiting exactly one vertex per cluster, anchored at the
// depot: vertices.front() == vertices.back() == GtspGraph::kDepot.
struct GtspTour {
  std::vector<VertexId> vertices;
  double cost = 0.0;  // seconds; equals the sum of the traversed edge costs
};

// Sums the traversed edge costs. Throws Error(Malformed) if any consecutive
// pair has no edge.
double recompute_tour_cost(const GtspTour& tour, const GtspGraph& graph);

// Structural audit used by tests and the solution verifier: depot anchoring,
// one vertex per cluster, every edge present, stored cost matching the
// recomputed sum. Returns human-readable problems, empty when clean.
std::vector<std::string> check_tour(const GtspTour& tour, const GtspGraph& graph);

}  // namespace mule
