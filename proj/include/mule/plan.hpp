#pragma once

#include <string>
#include <vector>

#include "mule/tour.hpp"

namespace mule {

// One tour edge unfolded into mission time components. leg_total always
// equals the sum of the five components and the graph cost of the edge.
struct Leg {
  int from_site = 0;  // 0 = depot
  int to_site = 0;
  EdgeType type = EdgeType::Depot;
  int depart_level = 0;
  int arrive_level = 0;
  double flight_time = 0.0;   // drone in the air (Types I and III)
  double mule_time = 0.0;     // riding the ground vehicle (Type II)
  double charge_time = 0.0;   // charging that extends the leg (Type III)
  double takeoff_time = 0.0;
  double landing_time = 0.0;
  double leg_total = 0.0;
};

struct MissionPlan {
  Mode mode = Mode::Smcs;
  std::vector<Leg> legs;
  double total_time = 0.0;        // sum of leg totals; waiting never counts
  std::vector<int> ugv_route;     // Smcs: charging-duty sites in visit order
  std::vector<int> station_sites; // Mscs: charger sites, ascending
};

// Unfolds a tour into legs, keeping each edge's winning type as found in
// the graph. The two depot legs stay in the plan with zero cost. Throws
// Error(Malformed) when the tour uses a missing edge.
MissionPlan decode(const GtspTour& tour, const GtspGraph& graph);

// Sum of the leg totals.
double total_time(const MissionPlan& plan);

// The rule a plan check can break. Listed roughly in the order checked.
enum class PlanRule {
  Structure,          // leg sequence / depot anchoring broken
  ModeEdge,           // an edge type the mode forbids (Type II in Mscs)
  LevelBounds,        // battery level outside 1..m
  LevelDrop,          // Type I arrival level != departure minus consumption
  Type2Discharge,     // Type II arriving below the departure level
  Type3Floor,         // Type III landing below the flight's battery floor
  EdgeCost,           // leg_total != cost recomputed from raw parameters
  LegComponents,      // stored time components off for the leg's type
  BatteryContinuity,  // departure level != previous arrival level
  InitialCharge,      // first departure not at full battery
  Coverage,           // a site missed or visited more than once
  TotalTime,          // total_time != sum of leg totals
  DutyRoute,          // ugv_route / station_sites don't match the legs
};

const char* to_string(PlanRule rule);

struct PlanViolation {
  int leg = -1;  // -1 = plan-level
  PlanRule rule = PlanRule::Structure;
  std::string detail;
};

// Independent audit of a plan against the raw instance: recomputes every
// leg cost and component from the cost formulas, re-derives the duty route,
// and checks battery continuity, bounds, coverage and the total. Shares no
// code with decode. Returns every violation found, empty when clean.
std::vector<PlanViolation> verify_plan(const MissionPlan& plan, const ProblemInstance& inst);

}  // namespace mule
