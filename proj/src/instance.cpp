#include "mule/instance.hpp"

#include <cassert>
#include <cmath>
#include <random>
#include <sstream>

#include "mule/error.hpp"

namespace mule {

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double travel_time(const Point& a, const Point& b, double speed) {
  assert(speed > 0.0);
  return distance(a, b) / speed;
}

const Point& ProblemInstance::position(int site_id) const {
  if (site_id == 0) return depot;
  assert(site_id >= 1 && site_id <= num_sites());
  return sites[static_cast<std::size_t>(site_id - 1)].position;
}

double ProblemInstance::uav_time(int a, int b) const {
  return travel_time(position(a), position(b), uav_speed);
}

double ProblemInstance::ugv_time(int a, int b) const {
  return travel_time(position(a), position(b), ugv_speed);
}

int levels_consumed(const ProblemInstance& inst, int site_a, int site_b) {
  const double percent = inst.uav_time(site_a, site_b) * inst.discharge_rate;
  return static_cast<int>(std::ceil(percent * inst.m / 100.0));
}

std::vector<Violation> validate_instance(const ProblemInstance& inst) {
  std::vector<Violation> out;
  auto flag = [&out](const std::string& field, const std::string& message) {
    out.push_back({field, message});
  };

  if (inst.sites.empty()) flag("sites", "at least one site is required");
  if (inst.m < 2) flag("m", "need at least two battery levels (m >= 2)");
  if (!(inst.uav_speed > 0.0)) flag("uav_speed", "speed must be positive");
  if (!(inst.ugv_speed > 0.0)) flag("ugv_speed", "speed must be positive");
  if (!(inst.discharge_rate > 0.0)) flag("discharge_rate", "discharge rate must be positive");
  if (inst.r < 0.0) flag("r", "recharge time per percent cannot be negative");
  if (inst.t_takeoff < 0.0) flag("t_takeoff", "takeoff time cannot be negative");
  if (inst.t_land < 0.0) flag("t_land", "landing time cannot be negative");

  if (!std::isfinite(inst.depot.x) || !std::isfinite(inst.depot.y))
    flag("depot", "coordinates must be finite");
  for (int i = 0; i < inst.num_sites(); ++i) {
    const Site& s = inst.sites[static_cast<std::size_t>(i)];
    std::ostringstream field;
    field << "sites[" << i << "]";
    if (s.id != i + 1) flag(field.str(), "site ids must be 1-based and contiguous");
    if (!std::isfinite(s.position.x) || !std::isfinite(s.position.y))
      flag(field.str(), "coordinates must be finite");
  }

  // Reachability only makes sense once the scalar parameters are sane.
  if (out.empty()) {
    const int n = inst.num_sites();
    for (int a = 0; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        const int drop = levels_consumed(inst, a, b);
        if (drop >= inst.m) {
          std::ostringstream field, msg;
          field << "reachability(" << a << "," << b << ")";
          msg << "pair unreachable at full charge: the direct flight drains " << drop
              << " of " << inst.m << " battery levels (at most m-1 allowed)";
          flag(field.str(), msg.str());
        }
      }
    }
  }
  return out;
}

void validate_instance_or_throw(const ProblemInstance& inst) {
  const std::vector<Violation> violations = validate_instance(inst);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid instance:";
  for (const Violation& v : violations) msg << "\n  " << v.field << ": " << v.message;
  throw Error(ErrorCode::Validation, msg.str());
}

ProblemInstance generate_random_instance(std::uint64_t seed, int n, double area_width,
                                         double area_height, const GeneratorParams& params) {
  if (n < 1) throw Error(ErrorCode::Validation, "generator needs n >= 1 sites");
  if (!(area_width > 0.0) || !(area_height > 0.0))
    throw Error(ErrorCode::Validation, "generator needs a positive area");

  ProblemInstance inst;
  inst.depot = {area_width / 2.0, area_height / 2.0};
  inst.uav_speed = params.uav_speed;
  inst.ugv_speed = params.ugv_speed;
  inst.m = params.m;
  inst.r = params.r;
  inst.t_takeoff = params.t_takeoff;
  inst.t_land = params.t_land;
  inst.discharge_rate = params.discharge_rate;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(0.0, area_width);
  std::uniform_real_distribution<double> uy(0.0, area_height);

  const int kMaxAttempts = 10000;
  for (int i = 1; i <= n; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < kMaxAttempts && !placed; ++attempt) {
      Site candidate{i, {ux(rng), uy(rng)}};
      inst.sites.push_back(candidate);
      placed = true;
      // The new site must be reachable on a full charge from the depot and
      // from every site already placed.
      for (int other = 0; other < i && placed; ++other) {
        if (levels_consumed(inst, i, other) >= inst.m) placed = false;
      }
      if (!placed) inst.sites.pop_back();
    }
    if (!placed) {
      std::ostringstream msg;
      msg << "could not place site " << i << " after " << kMaxAttempts
          << " draws: the area is too large for the battery range "
          << "(grow uav_speed or m, or shrink the area)";
      throw Error(ErrorCode::Validation, msg.str());
    }
  }
  return inst;
}

}  // namespace mule
