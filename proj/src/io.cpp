#include "mule/io.hpp"

#include <fstream>
#include <sstream>

#include "mule/error.hpp"
#include "mule/numeric.hpp"

namespace mule {

using nlohmann::json;

Mode mode_from_string(const std::string& name) {
  if (name == "mscs") return Mode::Mscs;
  if (name == "smcs") return Mode::Smcs;
  throw Error(ErrorCode::Validation, "unknown mode '" + name + "' (expected mscs or smcs)");
}

EdgeType edge_type_from_string(const std::string& name) {
  if (name == "I") return EdgeType::TypeI;
  if (name == "II") return EdgeType::TypeII;
  if (name == "III") return EdgeType::TypeIII;
  if (name == "D") return EdgeType::Depot;
  throw Error(ErrorCode::Malformed, "unknown edge type '" + name + "'");
}

json instance_to_json(const ProblemInstance& inst) {
  json sites = json::array();
  for (const Site& site : inst.sites) sites.push_back({site.position.x, site.position.y});
  return json{{"sites", std::move(sites)},
              {"depot", {inst.depot.x, inst.depot.y}},
              {"uav_speed", inst.uav_speed},
              {"ugv_speed", inst.ugv_speed},
              {"m", inst.m},
              {"r", inst.r},
              {"t_takeoff", inst.t_takeoff},
              {"t_land", inst.t_land},
              {"discharge_rate", inst.discharge_rate}};
}

ProblemInstance instance_from_json(const json& j) {
  try {
    ProblemInstance inst;
    const json& sites = j.at("sites");
    if (!sites.is_array()) throw Error(ErrorCode::Malformed, "instance json: sites must be an array");
    int id = 0;
    for (const json& entry : sites) {
      Site site;
      site.id = ++id;
      site.position.x = entry.at(0).get<double>();
      site.position.y = entry.at(1).get<double>();
      inst.sites.push_back(site);
    }
    const json& depot = j.at("depot");
    inst.depot.x = depot.at(0).get<double>();
    inst.depot.y = depot.at(1).get<double>();
    inst.uav_speed = j.at("uav_speed").get<double>();
    inst.ugv_speed = j.at("ugv_speed").get<double>();
    inst.m = j.at("m").get<int>();
    inst.r = j.at("r").get<double>();
    inst.t_takeoff = j.at("t_takeoff").get<double>();
    inst.t_land = j.at("t_land").get<double>();
    inst.discharge_rate = j.at("discharge_rate").get<double>();
    return inst;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Malformed, std::string("instance json: ") + e.what());
  }
}

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Validation, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Malformed, path + ": " + e.what());
  }
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Validation, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace

ProblemInstance load_instance(const std::string& path) {
  return instance_from_json(parse_file(path));
}

void save_instance(const ProblemInstance& inst, const std::string& path) {
  write_file(path, instance_to_json(inst));
}

std::uint64_t instance_digest(const ProblemInstance& inst) {
  const std::string canonical = instance_to_json(inst).dump();
  std::uint64_t hash = 14695981039346656037ULL;
  for (const unsigned char c : canonical) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string digest_hex(std::uint64_t digest) {
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[digest & 0xf];
    digest >>= 4;
  }
  return out;
}

namespace {

json leg_to_json(const Leg& leg) {
  return json{{"from", leg.from_site},
              {"to", leg.to_site},
              {"type", to_string(leg.type)},
              {"depart_level", leg.depart_level},
              {"arrive_level", leg.arrive_level},
              {"flight_time", leg.flight_time},
              {"mule_time", leg.mule_time},
              {"charge_time", leg.charge_time},
              {"takeoff_time", leg.takeoff_time},
              {"landing_time", leg.landing_time},
              {"leg_total", leg.leg_total}};
}

Leg leg_from_json(const json& j) {
  Leg leg;
  leg.from_site = j.at("from").get<int>();
  leg.to_site = j.at("to").get<int>();
  leg.type = edge_type_from_string(j.at("type").get<std::string>());
  leg.depart_level = j.at("depart_level").get<int>();
  leg.arrive_level = j.at("arrive_level").get<int>();
  leg.flight_time = j.at("flight_time").get<double>();
  leg.mule_time = j.at("mule_time").get<double>();
  leg.charge_time = j.at("charge_time").get<double>();
  leg.takeoff_time = j.at("takeoff_time").get<double>();
  leg.landing_time = j.at("landing_time").get<double>();
  leg.leg_total = j.at("leg_total").get<double>();
  return leg;
}

json plan_to_json(const MissionPlan& plan) {
  json legs = json::array();
  for (const Leg& leg : plan.legs) legs.push_back(leg_to_json(leg));
  return json{{"mode", to_string(plan.mode)},
              {"legs", std::move(legs)},
              {"total_time", plan.total_time},
              {"ugv_route", plan.ugv_route},
              {"station_sites", plan.station_sites}};
}

MissionPlan plan_from_json(const json& j) {
  MissionPlan plan;
  plan.mode = mode_from_string(j.at("mode").get<std::string>());
  for (const json& leg : j.at("legs")) plan.legs.push_back(leg_from_json(leg));
  plan.total_time = j.at("total_time").get<double>();
  plan.ugv_route = j.at("ugv_route").get<std::vector<int>>();
  plan.station_sites = j.at("station_sites").get<std::vector<int>>();
  return plan;
}

}  // namespace

json solution_to_json(const SolutionDocument& doc) {
  return json{{"format", "mule-solution"},
              {"version", 1},
              {"instance", instance_to_json(doc.instance)},
              {"instance_digest", doc.digest},
              {"solver", doc.solver},
              {"mode", to_string(doc.mode)},
              {"edge_types",
               {{"type1", doc.mask.type1}, {"type2", doc.mask.type2}, {"type3", doc.mask.type3}}},
              {"seed", doc.seed},
              {"config", doc.config},
              {"wall_clock_seconds", doc.wall_clock_seconds},
              {"tour", {{"vertices", doc.tour.vertices}, {"cost", doc.tour.cost}}},
              {"plan", plan_to_json(doc.plan)}};
}

SolutionDocument solution_from_json(const json& j) {
  try {
    SolutionDocument doc;
    doc.instance = instance_from_json(j.at("instance"));
    doc.digest = j.at("instance_digest").get<std::string>();
    doc.solver = j.at("solver").get<std::string>();
    doc.mode = mode_from_string(j.at("mode").get<std::string>());
    const json& mask = j.at("edge_types");
    doc.mask.type1 = mask.at("type1").get<bool>();
    doc.mask.type2 = mask.at("type2").get<bool>();
    doc.mask.type3 = mask.at("type3").get<bool>();
    doc.seed = j.at("seed").get<std::uint64_t>();
    doc.config = j.at("config").get<std::map<std::string, double>>();
    doc.wall_clock_seconds = j.at("wall_clock_seconds").get<double>();
    doc.tour.vertices = j.at("tour").at("vertices").get<std::vector<VertexId>>();
    doc.tour.cost = j.at("tour").at("cost").get<double>();
    doc.plan = plan_from_json(j.at("plan"));
    return doc;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Malformed, std::string("solution json: ") + e.what());
  }
}

SolutionDocument load_solution(const std::string& path) {
  return solution_from_json(parse_file(path));
}

void save_solution(const SolutionDocument& doc, const std::string& path) {
  write_file(path, solution_to_json(doc));
}

std::vector<std::string> verify_solution(const SolutionDocument& doc) {
  std::vector<std::string> problems;

  for (const Violation& v : validate_instance(doc.instance))
    problems.push_back("instance: " + v.field + ": " + v.message);
  if (!problems.empty()) return problems;  // nothing downstream is meaningful

  if (digest_hex(instance_digest(doc.instance)) != doc.digest)
    problems.push_back("digest: stored instance does not match the recorded digest");

  const GtspGraph graph(doc.instance, doc.mode, doc.mask);
  std::vector<std::string> tour_problems = check_tour(doc.tour, graph);
  for (const std::string& p : tour_problems) problems.push_back("tour: " + p);

  for (const PlanViolation& v : verify_plan(doc.plan, doc.instance)) {
    std::ostringstream msg;
    msg << "plan";
    if (v.leg >= 0) msg << " leg " << v.leg;
    msg << ": " << to_string(v.rule) << ": " << v.detail;
    problems.push_back(msg.str());
  }

  if (doc.plan.mode != doc.mode)
    problems.push_back("plan: mode differs from the document mode");

  if (tour_problems.empty()) {
    const MissionPlan reference = decode(doc.tour, graph);
    if (reference.legs.size() != doc.plan.legs.size()) {
      problems.push_back("plan: leg count does not match the tour");
    } else {
      for (std::size_t i = 0; i < reference.legs.size(); ++i) {
        const Leg& ours = reference.legs[i];
        const Leg& theirs = doc.plan.legs[i];
        const bool same = ours.from_site == theirs.from_site && ours.to_site == theirs.to_site &&
                          ours.type == theirs.type && ours.depart_level == theirs.depart_level &&
                          ours.arrive_level == theirs.arrive_level &&
                          nearly_equal(ours.leg_total, theirs.leg_total);
        if (!same) {
          std::ostringstream msg;
          msg << "plan leg " << i << ": does not match the tour's decoded leg";
          problems.push_back(msg.str());
        }
      }
    }
    if (!nearly_equal(doc.plan.total_time, doc.tour.cost))
      problems.push_back("plan: total_time does not equal the tour cost");
  }

  return problems;
}

json mmcs_to_json(const MmcsInstance& inst, const MmcsResult& result) {
  json vehicles = json::array();
  for (const std::vector<int>& route : result.routes) {
    json sites = json::array();
    for (const int duty : route) sites.push_back(inst.charging_sites[static_cast<std::size_t>(duty)]);
    vehicles.push_back({{"duties", route}, {"sites", std::move(sites)}});
  }
  json handovers = json::array();
  for (std::size_t i = 0; i < result.selected_edges.size(); ++i) {
    handovers.push_back({{"from", result.selected_edges[i].first},
                         {"to", result.selected_edges[i].second},
                         {"slack", result.edge_slack[i]}});
  }
  return json{{"ugv_count", result.ugv_count},
              {"duty_sites", inst.charging_sites},
              {"forced_edges", inst.forced_edges},
              {"handovers", std::move(handovers)},
              {"vehicles", std::move(vehicles)}};
}

}  // namespace mule
