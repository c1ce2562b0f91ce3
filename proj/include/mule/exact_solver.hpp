#pragma once

#include <cstddef>

#include "mule/tour.hpp"

namespace mule {

struct ExactConfig {
  int max_clusters = 16;                      // depot cluster included
  std::size_t max_states = std::size_t(1) << 26;  // 2^n * n * m table guard
};

// Optimal tour by dynamic programming over (visited cluster subset, current
// vertex), anchored at the depot. Deterministic: ties keep the first-found
// predecessor in ascending vertex-id order. Throws Error(SizeCap) above the
// caps and Error(Infeasible) when no tour exists.
GtspTour solve_exact_dp(const GtspGraph& graph, const ExactConfig& config = {});

// Independent reference: enumerates every cluster order outright and, per
// order, runs a layered shortest-path relaxation over the battery-level
// choices. Shares nothing with solve_exact_dp beyond the graph type.
// Capped at 8 site clusters.
GtspTour brute_force_oracle(const GtspGraph& graph);

}  // namespace mule
