#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "mule/tour.hpp"

namespace mule {

struct SearchConfig {
  std::uint64_t seed = 1;
  std::int64_t max_iterations = 10000;
  double time_limit_seconds = 60.0;

  // Fraction of site clusters removed per iteration (at least one).
  double removal_min_fraction = 0.10;
  double removal_max_fraction = 0.35;

  // Simulated-annealing acceptance. initial_temperature = 0 calibrates the
  // start so the median early uphill move is accepted with probability 0.5.
  double initial_temperature = 0.0;
  double cooling_rate = 0.9995;

  // Multiplicative insertion-cost noise in [1, 1 + insertion_noise].
  double insertion_noise = 0.10;

  // Operator-weight adaptation.
  int adaptation_period = 100;
  double reaction_factor = 0.2;
  double score_global_best = 10.0;
  double score_improving = 4.0;
  double score_accepted = 1.0;
};

struct HeuristicResult {
  GtspTour tour;
  std::int64_t iterations = 0;
  bool hit_time_limit = false;  // best-so-far returned; the cutoff point is
                                // wall-clock dependent, so only runs bounded
                                // by max_iterations are reproducible
};

// Adaptive large-neighborhood search over cluster tours: destroy (random /
// segment / worst-edge removal), repair (cheapest insertion with optional
// noise), simulated-annealing acceptance, adaptive operator weights, and a
// battery-level reoptimization pass whenever the global best improves.
// Deterministic for a fixed seed on a single thread.
HeuristicResult solve_heuristic(const GtspGraph& graph, const SearchConfig& config = {});

// Greedy nearest-feasible-vertex construction from the depot. Every edge
// out of the depot costs the same, so the seed picks the first cluster;
// later ties break on the smallest vertex id.
GtspTour initial_tour(const GtspGraph& graph, std::uint64_t seed);

enum class RemovalOp { Random, Segment, WorstEdge };

// Open chain [depot, ..., depot] covering a subset of the site clusters,
// with every consecutive pair connected by an existing edge.
struct PartialTour {
  std::vector<VertexId> chain;
};

// Removes `count` site clusters (never the depot). When a removal leaves
// neighbors whose levels admit no edge, the right-hand vertex is swapped
// for the lowest level reachable from the left neighbor instead of
// cascading more removals; as a last resort the cluster is removed too.
// Returns the repaired partial tour and every cluster taken out.
std::pair<PartialTour, std::vector<int>> remove_clusters(const GtspTour& tour,
                                                         const GtspGraph& graph, int count,
                                                         RemovalOp op, std::mt19937_64& rng);

// Cheapest feasible insertion over every (position, battery level) slot;
// ties prefer the earliest position, then the lowest level. noise > 0
// multiplies each candidate's delta by a uniform factor from
// [1, 1 + noise]. Returns false when no slot admits the cluster.
bool insert_cluster(PartialTour& partial, const GtspGraph& graph, int cluster,
                    std::mt19937_64& rng, double noise = 0.0);

// Cheapest battery-level assignment for the site order of `tour`, found by
// relaxing level choices cluster by cluster. Never worsens the tour.
GtspTour reoptimize_levels(const GtspTour& tour, const GtspGraph& graph);

}  // namespace mule
