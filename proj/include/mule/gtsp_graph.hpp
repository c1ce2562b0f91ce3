#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "mule/instance.hpp"

namespace mule {

// Smcs: one ground vehicle travels with the drone and recharges it, either
// in transit or at a meeting site. Mscs: recharging only happens on
// stationary chargers placed at sites.
enum class Mode { Mscs, Smcs };

// TypeI: direct flight, battery drops by the flight's level consumption.
// TypeII: the drone rides the ground vehicle and recharges in transit.
// TypeIII: fly, then land on a charger at the destination and recharge.
// Depot: zero-cost dummy edges that anchor the open path as a closed tour.
enum class EdgeType : std::uint8_t { TypeI, TypeII, TypeIII, Depot };

const char* to_string(Mode mode);
const char* to_string(EdgeType type);

// Which inter-site edge types a graph may use.
struct EdgeTypeMask {
  bool type1 = true;
  bool type2 = true;
  bool type3 = true;

  friend bool operator==(const EdgeTypeMask&, const EdgeTypeMask&) = default;
};

// Mscs has no vehicle moving with the drone, so Type II is out.
EdgeTypeMask default_mask(Mode mode);

using VertexId = std::int32_t;

struct TypedEdge {
  double cost = 0.0;  // seconds
  EdgeType type = EdgeType::Depot;
};

// Battery-annotated directed graph: every site becomes a cluster of m
// vertices, one per arrival battery level, plus a singleton depot cluster.
// A tour picking one vertex per cluster fixes both the visit order and the
// battery level at every stop.
//
// Edges are evaluated on demand from cached pairwise travel times, so the
// graph stays cheap to build at any size. edge() is a pure function of the
// instance and the mask: the same query always reproduces the same cost and
// the same winning type.
class GtspGraph {
 public:
  GtspGraph(const ProblemInstance& instance, Mode mode)
      : GtspGraph(instance, mode, default_mask(mode)) {}
  GtspGraph(const ProblemInstance& instance, Mode mode, EdgeTypeMask mask);

  int num_sites() const { return n_; }
  int levels() const { return m_; }
  int num_vertices() const { return 1 + n_ * m_; }
  int num_clusters() const { return n_ + 1; }
  Mode mode() const { return mode_; }
  EdgeTypeMask mask() const { return mask_; }
  const ProblemInstance& instance() const { return instance_; }

  static constexpr VertexId kDepot = 0;

  VertexId vertex(int site, int level) const {
    assert(site >= 1 && site <= n_ && level >= 1 && level <= m_);
    return static_cast<VertexId>((site - 1) * m_ + level);
  }
  int site_of(VertexId v) const { return v == kDepot ? 0 : (v - 1) / m_ + 1; }
  int level_of(VertexId v) const { return v == kDepot ? 0 : (v - 1) % m_ + 1; }
  // Clusters are numbered like sites, with 0 for the depot cluster.
  int cluster_of(VertexId v) const { return site_of(v); }

  double uav_time(int site_a, int site_b) const { return tuav_[pair_index(site_a, site_b)]; }
  double ugv_time(int site_a, int site_b) const { return tugv_[pair_index(site_a, site_b)]; }
  // Battery levels drained by the direct flight (cached levels_consumed).
  int drop(int site_a, int site_b) const { return drop_[pair_index(site_a, site_b)]; }

  // Per-type costs, ignoring the mask; nullopt when the existence rule
  // fails. Both endpoints must be site vertices in different clusters.
  std::optional<double> type1_cost(VertexId from, VertexId to) const {
    const int i = site_of(from), j = site_of(to);
    if (i == 0 || j == 0 || i == j) return std::nullopt;
    if (level_of(from) - level_of(to) != drop(i, j)) return std::nullopt;
    return uav_time(i, j);
  }

  std::optional<double> type2_cost(VertexId from, VertexId to) const {
    const int i = site_of(from), j = site_of(to);
    if (i == 0 || j == 0 || i == j) return std::nullopt;
    const int k = level_of(from), kp = level_of(to);
    if (kp < k) return std::nullopt;  // the ride only ever charges
    const double recharge = instance_.r * (kp - k) * instance_.percent_per_level();
    return std::max(recharge, ugv_time(i, j)) + instance_.t_takeoff + instance_.t_land;
  }

  std::optional<double> type3_cost(VertexId from, VertexId to) const {
    const int i = site_of(from), j = site_of(to);
    if (i == 0 || j == 0 || i == j) return std::nullopt;
    const int k = level_of(from), kp = level_of(to);
    if (kp < k - drop(i, j)) return std::nullopt;  // cannot land below the flight's floor
    const double flight = uav_time(i, j);
    // Percent put back by the destination charger: net level gain plus what
    // the flight drained. The discrete floor level can sit below the
    // continuous arrival charge, so clamp at zero instead of crediting time.
    const double restored =
        std::max(0.0, (kp - k) * instance_.percent_per_level() + flight * instance_.discharge_rate);
    return flight + instance_.r * restored + instance_.t_takeoff + instance_.t_land;
  }

  // Minimum-cost edge across the allowed types. Ties prefer Type I, then
  // Type II (pure flight, then muling). The winning type is part of the
  // returned value, so consumers never re-derive argmins from costs.
  std::optional<TypedEdge> edge(VertexId from, VertexId to) const {
    if (from == to) return std::nullopt;
    const int ci = site_of(from), cj = site_of(to);
    if (ci == cj) return std::nullopt;  // no intra-cluster edges
    if (ci == 0) {
      // Tours leave the depot with a full battery.
      if (level_of(to) == m_) return TypedEdge{0.0, EdgeType::Depot};
      return std::nullopt;
    }
    if (cj == 0) return TypedEdge{0.0, EdgeType::Depot};

    std::optional<TypedEdge> best;
    if (mask_.type1) {
      if (const auto c = type1_cost(from, to)) best = TypedEdge{*c, EdgeType::TypeI};
    }
    if (mask_.type2) {
      if (const auto c = type2_cost(from, to)) {
        if (!best || *c < best->cost) best = TypedEdge{*c, EdgeType::TypeII};
      }
    }
    if (mask_.type3) {
      if (const auto c = type3_cost(from, to)) {
        if (!best || *c < best->cost) best = TypedEdge{*c, EdgeType::TypeIII};
      }
    }
    return best;
  }

  // Number of existing directed edges (streamed, nothing materialized).
  std::size_t count_edges() const;

  // One line per edge: "from_site from_level to_site to_level type cost".
  // Depot endpoints print as site 0, level 0.
  void dump_edges(std::ostream& os) const;

 private:
  std::size_t pair_index(int a, int b) const {
    assert(a >= 0 && a <= n_ && b >= 0 && b <= n_);
    return static_cast<std::size_t>(a) * (n_ + 1) + b;
  }

  ProblemInstance instance_;
  Mode mode_;
  EdgeTypeMask mask_;
  int n_ = 0;
  int m_ = 0;
  std::vector<double> tuav_;  // (n+1)^2 pairwise flight times, 0 = depot
  std::vector<double> tugv_;  // (n+1)^2 pairwise drive times
  std::vector<int> drop_;     // (n+1)^2 pairwise level consumption
};

}  // namespace mule
