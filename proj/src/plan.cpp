#include "mule/plan.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mule/error.hpp"
#include "mule/numeric.hpp"

namespace mule {

const char* to_string(PlanRule rule) {
  switch (rule) {
    case PlanRule::Structure: return "structure";
    case PlanRule::ModeEdge: return "mode_edge";
    case PlanRule::LevelBounds: return "level_bounds";
    case PlanRule::LevelDrop: return "level_drop";
    case PlanRule::Type2Discharge: return "type2_discharge";
    case PlanRule::Type3Floor: return "type3_floor";
    case PlanRule::EdgeCost: return "edge_cost";
    case PlanRule::LegComponents: return "leg_components";
    case PlanRule::BatteryContinuity: return "battery_continuity";
    case PlanRule::InitialCharge: return "initial_charge";
    case PlanRule::Coverage: return "coverage";
    case PlanRule::TotalTime: return "total_time";
    case PlanRule::DutyRoute: return "duty_route";
  }
  return "?";
}

namespace {

// Charging duties implied by the legs: Type II needs the vehicle at both
// ends of the ride, Type III needs it waiting at the destination. Sites are
// kept in visit order with consecutive repeats collapsed.
std::vector<int> route_from_legs(const std::vector<Leg>& legs) {
  std::vector<int> route;
  auto push = [&route](int site) {
    if (route.empty() || route.back() != site) route.push_back(site);
  };
  for (const Leg& leg : legs) {
    if (leg.type == EdgeType::TypeII) {
      push(leg.from_site);
      push(leg.to_site);
    } else if (leg.type == EdgeType::TypeIII) {
      push(leg.to_site);
    }
  }
  return route;
}

std::vector<int> stations_from_legs(const std::vector<Leg>& legs) {
  std::vector<int> stations;
  for (const Leg& leg : legs) {
    if (leg.type == EdgeType::TypeIII) stations.push_back(leg.to_site);
  }
  std::sort(stations.begin(), stations.end());
  stations.erase(std::unique(stations.begin(), stations.end()), stations.end());
  return stations;
}

}  // namespace

MissionPlan decode(const GtspTour& tour, const GtspGraph& graph) {
  const ProblemInstance& inst = graph.instance();
  MissionPlan plan;
  plan.mode = graph.mode();

  for (std::size_t i = 0; i + 1 < tour.vertices.size(); ++i) {
    const VertexId u = tour.vertices[i];
    const VertexId v = tour.vertices[i + 1];
    const auto e = graph.edge(u, v);
    if (!e) {
      std::ostringstream msg;
      msg << "tour position " << i << " uses a missing edge";
      throw Error(ErrorCode::Malformed, msg.str());
    }

    Leg leg;
    leg.from_site = graph.site_of(u);
    leg.to_site = graph.site_of(v);
    leg.type = e->type;
    leg.depart_level = u == GtspGraph::kDepot ? graph.levels() : graph.level_of(u);
    leg.arrive_level = v == GtspGraph::kDepot ? leg.depart_level : graph.level_of(v);
    leg.leg_total = e->cost;

    switch (e->type) {
      case EdgeType::Depot:
        break;
      case EdgeType::TypeI:
        leg.flight_time = graph.uav_time(leg.from_site, leg.to_site);
        break;
      case EdgeType::TypeII: {
        const double recharge =
            inst.r * (leg.arrive_level - leg.depart_level) * inst.percent_per_level();
        leg.mule_time = std::max(recharge, graph.ugv_time(leg.from_site, leg.to_site));
        leg.takeoff_time = inst.t_takeoff;
        leg.landing_time = inst.t_land;
        break;
      }
      case EdgeType::TypeIII: {
        leg.flight_time = graph.uav_time(leg.from_site, leg.to_site);
        const double restored =
            std::max(0.0, (leg.arrive_level - leg.depart_level) * inst.percent_per_level() +
                              leg.flight_time * inst.discharge_rate);
        leg.charge_time = inst.r * restored;
        leg.takeoff_time = inst.t_takeoff;
        leg.landing_time = inst.t_land;
        break;
      }
    }
    plan.legs.push_back(leg);
    plan.total_time += e->cost;
  }

  if (plan.mode == Mode::Smcs) {
    plan.ugv_route = route_from_legs(plan.legs);
  } else {
    plan.station_sites = stations_from_legs(plan.legs);
  }
  return plan;
}

double total_time(const MissionPlan& plan) {
  double sum = 0.0;
  for (const Leg& leg : plan.legs) sum += leg.leg_total;
  return sum;
}

std::vector<PlanViolation> verify_plan(const MissionPlan& plan, const ProblemInstance& inst) {
  std::vector<PlanViolation> out;
  const auto flag = [&out](int leg, PlanRule rule, const std::string& detail) {
    out.push_back({leg, rule, detail});
  };

  const int n = inst.num_sites();
  const int m = inst.m;
  const int legs = static_cast<int>(plan.legs.size());
  if (legs < 2) {
    flag(-1, PlanRule::Structure, "a plan needs at least the two depot legs");
    return out;
  }

  // Structure: a single depot-anchored chain over valid site ids, with the
  // dummy type exactly on the depot legs.
  if (plan.legs.front().from_site != 0)
    flag(0, PlanRule::Structure, "first leg must leave the depot");
  if (plan.legs.back().to_site != 0)
    flag(legs - 1, PlanRule::Structure, "last leg must return to the depot");
  bool ids_ok = true;
  for (int t = 0; t < legs; ++t) {
    const Leg& leg = plan.legs[static_cast<std::size_t>(t)];
    if (leg.from_site < 0 || leg.from_site > n || leg.to_site < 0 || leg.to_site > n) {
      flag(t, PlanRule::Structure, "site id out of range");
      ids_ok = false;
      continue;
    }
    if (t > 0 && leg.from_site != plan.legs[static_cast<std::size_t>(t - 1)].to_site)
      flag(t, PlanRule::Structure, "legs do not chain: origin differs from previous destination");
    if (leg.from_site == 0 && t != 0)
      flag(t, PlanRule::Structure, "depot may only appear at the ends of the plan");
    if (leg.to_site == 0 && t != legs - 1)
      flag(t, PlanRule::Structure, "depot may only appear at the ends of the plan");
    const bool touches_depot = leg.from_site == 0 || leg.to_site == 0;
    if (touches_depot != (leg.type == EdgeType::Depot))
      flag(t, PlanRule::Structure, "dummy legs and depot endpoints must coincide");
  }
  if (!ids_ok) return out;

  // Per-leg semantics, recomputed from the raw parameters.
  for (int t = 0; t < legs; ++t) {
    const Leg& leg = plan.legs[static_cast<std::size_t>(t)];
    if (leg.depart_level < 1 || leg.depart_level > m)
      flag(t, PlanRule::LevelBounds, "departure level outside 1..m");
    if (leg.arrive_level < 1 || leg.arrive_level > m)
      flag(t, PlanRule::LevelBounds, "arrival level outside 1..m");
    if (plan.mode == Mode::Mscs && leg.type == EdgeType::TypeII)
      flag(t, PlanRule::ModeEdge, "Type II legs need a vehicle travelling with the drone");

    double expect_flight = 0.0, expect_mule = 0.0, expect_charge = 0.0;
    double expect_takeoff = 0.0, expect_landing = 0.0, expect_total = 0.0;
    bool cost_known = true;
    switch (leg.type) {
      case EdgeType::Depot:
        break;
      case EdgeType::TypeI: {
        const int drop = levels_consumed(inst, leg.from_site, leg.to_site);
        if (leg.arrive_level != leg.depart_level - drop)
          flag(t, PlanRule::LevelDrop,
               "direct flight must drain exactly the consumed levels");
        expect_flight = inst.uav_time(leg.from_site, leg.to_site);
        expect_total = expect_flight;
        break;
      }
      case EdgeType::TypeII: {
        if (leg.arrive_level < leg.depart_level) {
          flag(t, PlanRule::Type2Discharge, "riding the vehicle can only charge the battery");
          cost_known = false;
          break;
        }
        const double recharge =
            inst.r * (leg.arrive_level - leg.depart_level) * inst.percent_per_level();
        expect_mule = std::max(recharge, inst.ugv_time(leg.from_site, leg.to_site));
        expect_takeoff = inst.t_takeoff;
        expect_landing = inst.t_land;
        expect_total = expect_mule + expect_takeoff + expect_landing;
        break;
      }
      case EdgeType::TypeIII: {
        const int drop = levels_consumed(inst, leg.from_site, leg.to_site);
        if (leg.arrive_level < leg.depart_level - drop) {
          flag(t, PlanRule::Type3Floor, "cannot land below the flight's battery floor");
          cost_known = false;
          break;
        }
        expect_flight = inst.uav_time(leg.from_site, leg.to_site);
        const double restored =
            std::max(0.0, (leg.arrive_level - leg.depart_level) * inst.percent_per_level() +
                              expect_flight * inst.discharge_rate);
        expect_charge = inst.r * restored;
        expect_takeoff = inst.t_takeoff;
        expect_landing = inst.t_land;
        expect_total = expect_flight + expect_charge + expect_takeoff + expect_landing;
        break;
      }
    }
    if (cost_known) {
      if (!nearly_equal(leg.leg_total, expect_total)) {
        std::ostringstream msg;
        msg << "leg total " << leg.leg_total << " but the cost formula gives " << expect_total;
        flag(t, PlanRule::EdgeCost, msg.str());
      }
      const struct {
        const char* name;
        double stored, expected;
      } components[] = {
          {"flight_time", leg.flight_time, expect_flight},
          {"mule_time", leg.mule_time, expect_mule},
          {"charge_time", leg.charge_time, expect_charge},
          {"takeoff_time", leg.takeoff_time, expect_takeoff},
          {"landing_time", leg.landing_time, expect_landing},
      };
      for (const auto& c : components) {
        if (!nearly_equal(c.stored, c.expected)) {
          std::ostringstream msg;
          msg << c.name << " is " << c.stored << ", expected " << c.expected;
          flag(t, PlanRule::LegComponents, msg.str());
        }
      }
      const double component_sum = leg.flight_time + leg.mule_time + leg.charge_time +
                                   leg.takeoff_time + leg.landing_time;
      if (!nearly_equal(component_sum, leg.leg_total))
        flag(t, PlanRule::LegComponents, "components do not sum to the leg total");
    }
  }

  // Battery bookkeeping along the chain.
  if (plan.legs.front().depart_level != m)
    flag(0, PlanRule::InitialCharge, "tours must start with a full battery");
  for (int t = 1; t < legs; ++t) {
    if (plan.legs[static_cast<std::size_t>(t)].depart_level !=
        plan.legs[static_cast<std::size_t>(t - 1)].arrive_level)
      flag(t, PlanRule::BatteryContinuity,
           "departure level differs from the previous arrival level");
  }

  // Every site is the destination of exactly one non-returning leg.
  std::vector<int> visits(static_cast<std::size_t>(n) + 1, 0);
  for (const Leg& leg : plan.legs) {
    if (leg.to_site != 0) visits[static_cast<std::size_t>(leg.to_site)] += 1;
  }
  for (int s = 1; s <= n; ++s) {
    if (visits[static_cast<std::size_t>(s)] != 1) {
      std::ostringstream msg;
      msg << "site " << s << " visited " << visits[static_cast<std::size_t>(s)]
          << " times, expected once";
      flag(-1, PlanRule::Coverage, msg.str());
    }
  }

  if (!nearly_equal(plan.total_time, total_time(plan)))
    flag(-1, PlanRule::TotalTime, "total_time differs from the sum of leg totals");

  if (plan.mode == Mode::Smcs) {
    if (plan.ugv_route != route_from_legs(plan.legs))
      flag(-1, PlanRule::DutyRoute, "ugv_route does not match the duties implied by the legs");
    if (!plan.station_sites.empty())
      flag(-1, PlanRule::DutyRoute, "station_sites must be empty in smcs mode");
  } else {
    if (plan.station_sites != stations_from_legs(plan.legs))
      flag(-1, PlanRule::DutyRoute,
           "station_sites does not match the chargers implied by the legs");
    if (!plan.ugv_route.empty())
      flag(-1, PlanRule::DutyRoute, "ugv_route must be empty in mscs mode");
  }
  return out;
}

}  // namespace mule
