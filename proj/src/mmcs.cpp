#include "mule/mmcs.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

#include "mule/error.hpp"

namespace mule {

const char* to_string(ElapsedModel model) {
  return model == ElapsedModel::WallClock ? "wall" : "travel";
}

bool MmcsInstance::is_forced(int p, int q) const {
  for (const auto& [a, b] : forced_edges) {
    if (a == p && b == q) return true;
  }
  return false;
}

bool MmcsInstance::admissible(int p, int q) const {
  if (p >= q) return false;
  return is_forced(p, q) || uav_elapsed(p, q) >= ugv_direct(p, q);
}

MmcsInstance build_mmcs_instance(const MissionPlan& plan, const ProblemInstance& inst,
                                 double slow_speed, ElapsedModel model) {
  if (!(slow_speed > 0.0))
    throw Error(ErrorCode::Validation, "vehicle speed must be positive");

  std::vector<int> sites;
  std::vector<double> wall_at, travel_at;
  std::vector<std::pair<int, int>> forced;

  // A duty is a moment a vehicle must be present for the drone. Consecutive
  // duties at one site are one stay, so they merge and keep the earliest
  // clocks (the vehicle arrives for the first event and simply waits).
  const auto add_duty = [&](int site, double wall, double travel) -> int {
    if (!sites.empty() && sites.back() == site) return static_cast<int>(sites.size()) - 1;
    sites.push_back(site);
    wall_at.push_back(wall);
    travel_at.push_back(travel);
    return static_cast<int>(sites.size()) - 1;
  };

  double wall = 0.0;    // full timeline
  double travel = 0.0;  // flight and riding only
  for (const Leg& leg : plan.legs) {
    if (leg.type == EdgeType::TypeIII) {
      // The charger must be in place when the drone lands after the flight.
      add_duty(leg.to_site, wall + leg.flight_time, travel + leg.flight_time);
    } else if (leg.type == EdgeType::TypeII) {
      // The carrying vehicle is needed at the origin when the ride starts
      // and reaches the destination once the drive is over.
      const int p = add_duty(leg.from_site, wall, travel);
      const int q = add_duty(leg.to_site, wall + leg.landing_time + leg.mule_time,
                             travel + leg.mule_time);
      forced.emplace_back(p, q);
    }
    wall += leg.leg_total;
    travel += leg.flight_time + leg.mule_time;
  }

  MmcsInstance out;
  out.charging_sites = sites;
  out.forced_edges = std::move(forced);
  const std::size_t l = sites.size();
  out.uav_elapsed_flat.assign(l * l, 0.0);
  out.ugv_direct_flat.assign(l * l, 0.0);
  const std::vector<double>& clock = model == ElapsedModel::WallClock ? wall_at : travel_at;
  for (std::size_t p = 0; p < l; ++p) {
    for (std::size_t q = 0; q < l; ++q) {
      out.uav_elapsed_flat[p * l + q] = clock[q] - clock[p];
      out.ugv_direct_flat[p * l + q] =
          distance(inst.position(sites[p]), inst.position(sites[q])) / slow_speed;
    }
  }
  return out;
}

namespace {

// Hopcroft-Karp over out-slots (left) and in-slots (right). Welded pairs are
// seeded as matches and their slots carry no other edges, so no augmenting
// path can ever displace them.
struct Matcher {
  int l;
  std::vector<std::vector<int>> adj;
  std::vector<int> match_out, match_in, layer;

  explicit Matcher(const MmcsInstance& inst) : l(inst.size()) {
    adj.resize(static_cast<std::size_t>(l));
    match_out.assign(static_cast<std::size_t>(l), -1);
    match_in.assign(static_cast<std::size_t>(l), -1);
    for (const auto& [p, q] : inst.forced_edges) {
      if (p < 0 || q < 0 || p >= l || q >= l || p >= q)
        throw Error(ErrorCode::Malformed, "welded duty pair out of order");
      if (match_out[static_cast<std::size_t>(p)] != -1 ||
          match_in[static_cast<std::size_t>(q)] != -1)
        throw Error(ErrorCode::Malformed, "welded duty pairs share a slot");
      match_out[static_cast<std::size_t>(p)] = q;
      match_in[static_cast<std::size_t>(q)] = p;
    }
    for (int p = 0; p < l; ++p) {
      if (match_out[static_cast<std::size_t>(p)] != -1) continue;
      for (int q = p + 1; q < l; ++q) {
        if (match_in[static_cast<std::size_t>(q)] != -1) continue;
        if (inst.admissible(p, q)) adj[static_cast<std::size_t>(p)].push_back(q);
      }
    }
  }

  bool bfs() {
    std::queue<int> queue;
    layer.assign(static_cast<std::size_t>(l), -1);
    for (int p = 0; p < l; ++p) {
      if (match_out[static_cast<std::size_t>(p)] == -1) {
        layer[static_cast<std::size_t>(p)] = 0;
        queue.push(p);
      }
    }
    bool reachable_free = false;
    while (!queue.empty()) {
      const int p = queue.front();
      queue.pop();
      for (const int q : adj[static_cast<std::size_t>(p)]) {
        const int next = match_in[static_cast<std::size_t>(q)];
        if (next == -1) {
          reachable_free = true;
        } else if (layer[static_cast<std::size_t>(next)] == -1) {
          layer[static_cast<std::size_t>(next)] = layer[static_cast<std::size_t>(p)] + 1;
          queue.push(next);
        }
      }
    }
    return reachable_free;
  }

  bool augment(int p) {
    for (const int q : adj[static_cast<std::size_t>(p)]) {
      const int next = match_in[static_cast<std::size_t>(q)];
      if (next == -1 || (layer[static_cast<std::size_t>(next)] ==
                             layer[static_cast<std::size_t>(p)] + 1 &&
                         augment(next))) {
        match_out[static_cast<std::size_t>(p)] = q;
        match_in[static_cast<std::size_t>(q)] = p;
        return true;
      }
    }
    layer[static_cast<std::size_t>(p)] = -1;
    return false;
  }

  void run() {
    while (bfs()) {
      for (int p = 0; p < l; ++p) {
        if (match_out[static_cast<std::size_t>(p)] == -1) augment(p);
      }
    }
  }
};

}  // namespace

MmcsResult min_ugv_count(const MmcsInstance& inst) {
  MmcsResult out;
  const int l = inst.size();
  if (l == 0) return out;

  Matcher matcher(inst);
  matcher.run();

  int matched = 0;
  for (int p = 0; p < l; ++p) {
    const int q = matcher.match_out[static_cast<std::size_t>(p)];
    if (q == -1) continue;
    ++matched;
    out.selected_edges.emplace_back(p, q);
    out.edge_slack.push_back(inst.uav_elapsed(p, q) - inst.ugv_direct(p, q));
  }
  out.ugv_count = l - matched;

  for (int head = 0; head < l; ++head) {
    if (matcher.match_in[static_cast<std::size_t>(head)] != -1) continue;
    std::vector<int> route;
    for (int duty = head; duty != -1; duty = matcher.match_out[static_cast<std::size_t>(duty)])
      route.push_back(duty);
    out.routes.push_back(std::move(route));
  }
  assert(static_cast<int>(out.routes.size()) == out.ugv_count);
  return out;
}

int mmcs_brute_force(const MmcsInstance& inst) {
  const int l = inst.size();
  if (l == 0) return 0;
  if (l > 12) throw Error(ErrorCode::SizeCap, "exhaustive duty cover is capped at 12 duties");

  std::vector<int> forced_in(static_cast<std::size_t>(l), -1);
  std::vector<bool> forced_out(static_cast<std::size_t>(l), false);
  for (const auto& [p, q] : inst.forced_edges) {
    forced_in[static_cast<std::size_t>(q)] = p;
    forced_out[static_cast<std::size_t>(p)] = true;
  }

  const int masks = 1 << l;
  std::vector<int> memo(static_cast<std::size_t>(l + 1) * static_cast<std::size_t>(masks), -1);

  // Largest number of duty pairs that can share a vehicle, assigning each
  // in-slot j a free predecessor (or none), left to right.
  const auto rec = [&](const auto& self, int j, int used) -> int {
    if (j == l) return 0;
    int& slot = memo[static_cast<std::size_t>(j) * static_cast<std::size_t>(masks) +
                     static_cast<std::size_t>(used)];
    if (slot != -1) return slot;
    int best;
    if (forced_in[static_cast<std::size_t>(j)] != -1) {
      const int p = forced_in[static_cast<std::size_t>(j)];
      assert((used & (1 << p)) == 0);
      best = 1 + self(self, j + 1, used | (1 << p));
    } else {
      best = self(self, j + 1, used);
      for (int p = 0; p < j; ++p) {
        if (forced_out[static_cast<std::size_t>(p)]) continue;
        if (used & (1 << p)) continue;
        if (!inst.admissible(p, j)) continue;
        best = std::max(best, 1 + self(self, j + 1, used | (1 << p)));
      }
    }
    slot = best;
    return best;
  };

  return l - rec(rec, 0, 0);
}

}  // namespace mule
