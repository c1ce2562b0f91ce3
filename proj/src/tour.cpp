#include "mule/tour.hpp"

#include <sstream>

#include "mule/error.hpp"
#include "mule/numeric.hpp"

namespace mule {

double recompute_tour_cost(const GtspTour& tour, const GtspGraph& graph) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < tour.vertices.size(); ++i) {
    const auto e = graph.edge(tour.vertices[i], tour.vertices[i + 1]);
    if (!e) {
      std::ostringstream msg;
      msg << "tour uses a missing edge at position " << i << " (vertex " << tour.vertices[i]
          << " -> " << tour.vertices[i + 1] << ")";
      throw Error(ErrorCode::Malformed, msg.str());
    }
    total += e->cost;
  }
  return total;
}

std::vector<std::string> check_tour(const GtspTour& tour, const GtspGraph& graph) {
  std::vector<std::string> problems;
  const std::size_t expected = static_cast<std::size_t>(graph.num_clusters()) + 1;
  if (tour.vertices.size() != expected) {
    std::ostringstream msg;
    msg << "tour has " << tour.vertices.size() << " vertices, expected " << expected;
    problems.push_back(msg.str());
    return problems;
  }
  if (tour.vertices.front() != GtspGraph::kDepot || tour.vertices.back() != GtspGraph::kDepot)
    problems.push_back("tour must start and end at the depot");

  std::vector<int> seen(static_cast<std::size_t>(graph.num_clusters()), 0);
  for (std::size_t i = 0; i + 1 < tour.vertices.size(); ++i) {
    const VertexId v = tour.vertices[i];
    if (v < 0 || v >= graph.num_vertices()) {
      problems.push_back("tour contains an out-of-range vertex id");
      return problems;
    }
    seen[static_cast<std::size_t>(graph.cluster_of(v))] += 1;
  }
  for (int c = 0; c < graph.num_clusters(); ++c) {
    if (seen[static_cast<std::size_t>(c)] != 1) {
      std::ostringstream msg;
      msg << "cluster " << c << " visited " << seen[static_cast<std::size_t>(c)]
          << " times, expected once";
      problems.push_back(msg.str());
    }
  }

  for (std::size_t i = 0; i + 1 < tour.vertices.size(); ++i) {
    if (!graph.edge(tour.vertices[i], tour.vertices[i + 1])) {
      std::ostringstream msg;
      msg << "no edge between tour positions " << i << " and " << i + 1;
      problems.push_back(msg.str());
    }
  }
  if (problems.empty()) {
    const double recomputed = recompute_tour_cost(tour, graph);
    if (!nearly_equal(tour.cost, recomputed)) {
      std::ostringstream msg;
      msg << "stored cost " << tour.cost << " differs from recomputed " << recomputed;
      problems.push_back(msg.str());
    }
  }
  return problems;
}

}  // namespace mule
