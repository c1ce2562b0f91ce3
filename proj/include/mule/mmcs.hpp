#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mule/instance.hpp"
#include "mule/plan.hpp"

namespace mule {

// Which clock measures the drone's gap between two charging duties.
// WallClock runs over the whole mission timeline; TravelOnly advances only
// while the drone is moving (in flight, or riding a vehicle).
enum class ElapsedModel { WallClock, TravelOnly };

const char* to_string(ElapsedModel model);

// Scheduling view of a mission's charging duties when the chargers are a
// fleet of vehicles slower than the one the plan was built for. Duty q can
// follow duty p on the same vehicle iff that vehicle covers the ground
// between the duty sites within the drone's elapsed time — then one vehicle
// handles both and the fleet shrinks by one.
struct MmcsInstance {
  std::vector<int> charging_sites;  // duty sites in service order, collapsed
  std::vector<double> uav_elapsed_flat;  // l*l: drone elapsed time p -> q
  std::vector<double> ugv_direct_flat;   // l*l: slow-vehicle drive time
  // Duty pairs already welded together because the drone rides the vehicle
  // between them; these edges are selected no matter the timing.
  std::vector<std::pair<int, int>> forced_edges;

  int size() const { return static_cast<int>(charging_sites.size()); }
  double uav_elapsed(int p, int q) const {
    return uav_elapsed_flat[static_cast<std::size_t>(p) * charging_sites.size() +
                            static_cast<std::size_t>(q)];
  }
  double ugv_direct(int p, int q) const {
    return ugv_direct_flat[static_cast<std::size_t>(p) * charging_sites.size() +
                           static_cast<std::size_t>(q)];
  }
  bool is_forced(int p, int q) const;
  // p < q, and either welded or fast enough (ties feasible).
  bool admissible(int p, int q) const;
};

// Extracts the duties from a plan: one per Type III landing, one per Type II
// endpoint, consecutive duties at the same site merged into one. Vehicles
// drive straight lines at slow_speed. Validation error if slow_speed <= 0.
MmcsInstance build_mmcs_instance(const MissionPlan& plan, const ProblemInstance& inst,
                                 double slow_speed, ElapsedModel model);

struct MmcsResult {
  int ugv_count = 0;
  // Duty handovers kept on one vehicle, sorted by predecessor; slack is the
  // spare time on each (negative only on welded pairs that outrun the
  // vehicle's own speed -- reported, not rejected).
  std::vector<std::pair<int, int>> selected_edges;
  std::vector<double> edge_slack;
  std::vector<std::vector<int>> routes;  // chains of duty indices per vehicle
};

// Fewest vehicles covering every duty: minimum path cover of the precedence
// DAG via maximum bipartite matching (Hopcroft-Karp), with welded pairs
// pinned before augmenting.
MmcsResult min_ugv_count(const MmcsInstance& inst);

// Independent check: exhaustive predecessor assignment over in-slots,
// memoized on the set of used out-slots. Shares nothing with min_ugv_count
// beyond the instance type. Capped at 12 duties (SizeCap beyond).
int mmcs_brute_force(const MmcsInstance& inst);

}  // namespace mule
