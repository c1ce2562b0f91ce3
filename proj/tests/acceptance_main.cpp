// End-to-end acceptance checks. Each check prints one PASS/FAIL line; the
// exit status is the number of failures. Run through ctest or directly.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "mule/alns.hpp"
#include "mule/error.hpp"
#include "mule/exact_solver.hpp"
#include "mule/gtsp_graph.hpp"
#include "mule/instance.hpp"
#include "mule/mmcs.hpp"
#include "mule/noon_bean.hpp"
#include "mule/numeric.hpp"
#include "mule/plan.hpp"
#include "mule/tour.hpp"

using namespace mule;

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

ProblemInstance random_small_instance(std::mt19937_64& rng, int n, int m) {
  GeneratorParams params;
  params.m = m;
  params.ugv_speed = 3.0 + static_cast<double>(rng() % 8);
  params.r = 0.5 * static_cast<double>(rng() % 5);
  params.t_takeoff = static_cast<double>(rng() % 3) * 2.0;
  params.t_land = static_cast<double>(rng() % 3) * 2.0;
  return generate_random_instance(rng(), n, 600, 600, params);
}

// --- 1: the subset-relaxation solver against blunt enumeration ------------

std::string check_exact_vs_enumeration() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(101);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng() % 6);  // 2..7
    const int m = 2 + static_cast<int>(rng() % 4);  // 2..5
    const ProblemInstance inst = random_small_instance(rng, n, m);
    for (const Mode mode : {Mode::Smcs, Mode::Mscs}) {
      const GtspGraph g(inst, mode);
      const GtspTour fast = solve_exact_dp(g);
      const GtspTour slow = brute_force_oracle(g);
      if (!check_tour(fast, g).empty()) return "solver tour failed its structural audit";
      if (!check_tour(slow, g).empty()) return "enumeration tour failed its structural audit";
      if (!nearly_equal(fast.cost, slow.cost)) {
        std::ostringstream msg;
        msg << "instance " << i << " " << to_string(mode) << ": solver " << fast.cost
            << " vs enumeration " << slow.cost;
        return msg.str();
      }
    }
  }
  const double took = seconds_since(start);
  if (took > 120.0) {
    std::ostringstream msg;
    msg << "took " << took << "s, budget is 120s";
    return msg.str();
  }
  return "";
}

// --- 2: cluster-to-cycle reduction reproduces the optimum ----------------

std::string check_reduction_pipeline() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(202);
  int done = 0;
  while (done < 50) {
    const int n = 2 + static_cast<int>(rng() % 4);  // 2..5
    const int m = 2 + static_cast<int>(rng() % 3);  // 2..4
    if (n * m + 1 > 18) continue;
    const ProblemInstance inst = random_small_instance(rng, n, m);
    const Mode mode = done % 2 == 0 ? Mode::Smcs : Mode::Mscs;
    const GtspGraph g(inst, mode);
    const NoonBeanResult nb = transform(g);
    const GtspTour lifted = lift_tour(solve_tsp(nb.tsp), nb, g);
    if (!check_tour(lifted, g).empty()) return "lifted tour failed its structural audit";
    const GtspTour exact = solve_exact_dp(g);
    if (!nearly_equal(lifted.cost, exact.cost)) {
      std::ostringstream msg;
      msg << "instance " << done << ": reduction " << lifted.cost << " vs exact " << exact.cost;
      return msg.str();
    }
    ++done;
  }
  const double took = seconds_since(start);
  if (took > 300.0) {
    std::ostringstream msg;
    msg << "took " << took << "s, budget is 300s";
    return msg.str();
  }
  return "";
}

// --- 3: the adaptive search finds small optima ----------------------------

std::string check_search_finds_small_optima() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(303);
  int exact_matches = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng() % 6);  // 2..7
    const int m = 2 + static_cast<int>(rng() % 4);  // 2..5
    const ProblemInstance inst = random_small_instance(rng, n, m);
    const Mode mode = i % 2 == 0 ? Mode::Smcs : Mode::Mscs;
    const GtspGraph g(inst, mode);

    SearchConfig config;
    config.seed = static_cast<std::uint64_t>(i) + 1;
    config.max_iterations = 8000;
    config.time_limit_seconds = 1e9;
    const HeuristicResult found = solve_heuristic(g, config);
    if (!check_tour(found.tour, g).empty()) return "search tour failed its structural audit";

    const GtspTour exact = solve_exact_dp(g);
    if (found.tour.cost < exact.cost - 1e-9) {
      std::ostringstream msg;
      msg << "instance " << i << ": search " << found.tour.cost << " beat the optimum "
          << exact.cost;
      return msg.str();
    }
    if (nearly_equal(found.tour.cost, exact.cost)) {
      ++exact_matches;
    } else if (found.tour.cost > exact.cost * 1.02) {
      std::ostringstream msg;
      msg << "instance " << i << ": search " << found.tour.cost << " is more than 2% over "
          << exact.cost;
      return msg.str();
    }
  }
  if (exact_matches < 95) {
    std::ostringstream msg;
    msg << "only " << exact_matches << "/100 runs hit the optimum (need 95)";
    return msg.str();
  }
  const double took = seconds_since(start);
  if (took > 600.0) {
    std::ostringstream msg;
    msg << "took " << took << "s, budget is 600s";
    return msg.str();
  }
  return "";
}

// --- 4: free instant recharging degenerates to pure routing ---------------

std::string check_free_recharge_collapse() {
  std::mt19937_64 rng(404);
  for (int i = 0; i < 30; ++i) {
    const int n = 2 + static_cast<int>(rng() % 6);  // 2..7
    GeneratorParams params;
    params.m = 2 + static_cast<int>(rng() % 4);
    params.r = 0.0;
    params.t_takeoff = 0.0;
    params.t_land = 0.0;
    params.ugv_speed = params.uav_speed;
    const ProblemInstance inst = generate_random_instance(rng(), n, 600, 600, params);
    const GtspGraph g(inst, Mode::Smcs);
    const GtspTour tour = solve_exact_dp(g);
    const double reference = mule::testing::cheapest_overflight_path(inst);
    if (!nearly_equal(tour.cost, reference)) {
      std::ostringstream msg;
      msg << "instance " << i << ": solver " << tour.cost << " vs overflight enumeration "
          << reference;
      return msg.str();
    }
    const MissionPlan plan = decode(tour, g);
    if (!verify_plan(plan, inst).empty()) return "collapsed plan failed its audit";
  }
  return "";
}

// --- 5: dearer overheads or charging never shorten the mission ------------

std::string check_cost_monotonicity() {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);  // 3..6
    const int m = 2 + static_cast<int>(rng() % 3);
    GeneratorParams params;
    params.m = m;
    params.ugv_speed = 4.0;
    const std::uint64_t seed = rng();

    double last = -1.0;
    for (const double overhead : {0.0, 4.0, 8.0}) {
      GeneratorParams p = params;
      p.t_takeoff = overhead / 2.0;
      p.t_land = overhead / 2.0;
      p.r = 1.0;
      const ProblemInstance inst = generate_random_instance(seed, n, 500, 500, p);
      const double cost = solve_exact_dp(GtspGraph(inst, Mode::Smcs)).cost;
      if (cost < last - 1e-9) {
        std::ostringstream msg;
        msg << "overhead " << overhead << " made the mission cheaper (" << cost << " < " << last
            << ")";
        return msg.str();
      }
      last = cost;
    }

    last = -1.0;
    for (const double r : {0.0, 1.0, 4.0}) {
      GeneratorParams p = params;
      p.t_takeoff = 2.0;
      p.t_land = 2.0;
      p.r = r;
      const ProblemInstance inst = generate_random_instance(seed, n, 500, 500, p);
      const double cost = solve_exact_dp(GtspGraph(inst, Mode::Smcs)).cost;
      if (cost < last - 1e-9) {
        std::ostringstream msg;
        msg << "charge rate " << r << " made the mission cheaper (" << cost << " < " << last
            << ")";
        return msg.str();
      }
      last = cost;
    }
  }
  return "";
}

// --- 6: with free charging, ride vs fly is purely a speed question --------

std::string check_ride_vs_charge_sign() {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 20; ++trial) {
    GeneratorParams params;
    params.m = 3 + static_cast<int>(rng() % 3);
    params.r = 0.0;
    const double speeds[] = {2.0, 5.0, 10.0, 20.0};
    params.ugv_speed = speeds[rng() % 4];
    const ProblemInstance inst = generate_random_instance(rng(), 4, 500, 500, params);
    const GtspGraph g(inst, Mode::Smcs);
    for (int i = 1; i <= inst.num_sites(); ++i) {
      for (int j = 1; j <= inst.num_sites(); ++j) {
        if (i == j) continue;
        for (int k = 1; k <= inst.m; ++k) {
          for (int kp = k; kp <= inst.m; ++kp) {
            const auto ride = g.type2_cost(g.vertex(i, k), g.vertex(j, kp));
            const auto charge = g.type3_cost(g.vertex(i, k), g.vertex(j, kp));
            if (!ride || !charge) return "expected both options to exist";
            const double flight = g.uav_time(i, j), drive = g.ugv_time(i, j);
            if (std::abs(flight - drive) <= 1e-9) continue;
            if ((*charge < *ride) != (flight < drive)) {
              std::ostringstream msg;
              msg << "pair (" << i << "," << j << ") levels (" << k << "," << kp
                  << "): costs " << *charge << " vs " << *ride << " disagree with times "
                  << flight << " vs " << drive;
              return msg.str();
            }
          }
        }
      }
    }
  }
  return "";
}

// --- 7: fleet sizing agrees with enumeration and respects speed -----------

std::string check_fleet_sizing() {
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 200; ++trial) {
    const int duties = static_cast<int>(rng() % 13);  // 0..12
    const MmcsInstance inst = mule::testing::random_mmcs_instance(rng, duties);
    const MmcsResult result = min_ugv_count(inst);
    const int reference = mmcs_brute_force(inst);
    if (result.ugv_count != reference) {
      std::ostringstream msg;
      msg << "trial " << trial << " (" << duties << " duties): matching " << result.ugv_count
          << " vs enumeration " << reference;
      return msg.str();
    }
  }

  for (int trial = 0; trial < 10; ++trial) {
    GeneratorParams params;
    params.m = 3;
    params.ugv_speed = 5.0;
    params.r = 0.2;
    const ProblemInstance inst = generate_random_instance(rng(), 6, 500, 500, params);
    const GtspGraph g(inst, Mode::Smcs);
    const MissionPlan plan = decode(solve_exact_dp(g), g);
    int last = std::numeric_limits<int>::max();
    for (const double speed : {1.0, 2.0, 4.0, 8.0, 16.0}) {
      const int count =
          min_ugv_count(build_mmcs_instance(plan, inst, speed, ElapsedModel::WallClock))
              .ugv_count;
      if (count > last) {
        std::ostringstream msg;
        msg << "a faster fleet (" << speed << " m/s) needed more vehicles (" << count << " > "
            << last << ")";
        return msg.str();
      }
      last = count;
    }
  }
  return "";
}

// --- 8: realistic sizes inside wall-clock budgets --------------------------

std::string check_scale(const char* label, const ProblemInstance& inst, double search_seconds,
                        double budget_seconds) {
  const auto start = std::chrono::steady_clock::now();
  const GtspGraph g(inst, Mode::Smcs);
  SearchConfig config;
  config.seed = 7;
  config.max_iterations = std::numeric_limits<std::int64_t>::max();
  config.time_limit_seconds = search_seconds;
  const HeuristicResult result = solve_heuristic(g, config);
  if (!check_tour(result.tour, g).empty()) {
    return std::string(label) + ": tour failed its structural audit";
  }
  const MissionPlan plan = decode(result.tour, g);
  const auto violations = verify_plan(plan, inst);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << label << ": plan audit found " << violations.size() << " problem(s), first: "
        << to_string(violations.front().rule) << ": " << violations.front().detail;
    return msg.str();
  }
  const double took = seconds_since(start);
  if (took > budget_seconds) {
    std::ostringstream msg;
    msg << label << ": took " << took << "s, budget is " << budget_seconds << "s";
    return msg.str();
  }
  return "";
}

std::string check_scales_to_realistic_sizes() {
  {
    GeneratorParams params;
    params.m = 10;
    params.ugv_speed = 5.0;
    const ProblemInstance inst = generate_random_instance(42, 20, 1000, 1000, params);
    const std::string problem = check_scale("20 sites", inst, 45.0, 60.0);
    if (!problem.empty()) return problem;
  }
  {
    GeneratorParams params;
    params.m = 100;
    params.uav_speed = 5.0;
    params.ugv_speed = 5.0;
    params.r = 0.0;
    params.t_takeoff = 4.0;
    params.t_land = 4.0;
    const ProblemInstance inst = generate_random_instance(43, 50, 200, 100, params);
    const std::string problem = check_scale("50 sites, 100 levels", inst, 450.0, 600.0);
    if (!problem.empty()) return problem;
  }
  return "";
}

// --- 9: the plan audit catches tampering and trusts clean plans -----------

MissionPlan showcase_plan(const ProblemInstance& inst, Mode mode) {
  const GtspGraph g(inst, mode);
  GtspTour tour;
  tour.vertices = {GtspGraph::kDepot, g.vertex(1, 5), g.vertex(2, 3), g.vertex(3, 5),
                   g.vertex(4, 5),    g.vertex(5, 3), GtspGraph::kDepot};
  tour.cost = recompute_tour_cost(tour, g);
  return decode(tour, g);
}

std::string check_audit_sensitivity() {
  ProblemInstance inst;
  int id = 0;
  for (const double x : {0.0, 40.0, 80.0, 120.0, 160.0}) inst.sites.push_back({++id, {x, 0.0}});
  inst.depot = {0, 0};
  inst.uav_speed = 1.0;
  inst.ugv_speed = 0.5;
  inst.m = 5;
  inst.r = 0.5;
  const MissionPlan clean = showcase_plan(inst, Mode::Smcs);
  if (!verify_plan(clean, inst).empty()) return "the reference plan itself failed the audit";

  struct Mutation {
    const char* name;
    PlanRule expected;
    std::function<void(MissionPlan&)> apply;
  };
  const std::vector<Mutation> mutations = {
      {"padded leg total", PlanRule::EdgeCost, [](MissionPlan& p) { p.legs[2].leg_total += 1; }},
      {"padded ride time", PlanRule::EdgeCost,
       [](MissionPlan& p) {
         p.legs[2].mule_time += 10;
         p.legs[2].leg_total += 10;
       }},
      {"broken chain", PlanRule::Structure, [](MissionPlan& p) { p.legs[1].to_site = 3; }},
      {"start not at the depot", PlanRule::Structure,
       [](MissionPlan& p) { p.legs[0].from_site = 1; }},
      {"end not at the depot", PlanRule::Structure,
       [](MissionPlan& p) { p.legs.back().to_site = 5; }},
      {"depot in the middle", PlanRule::Structure, [](MissionPlan& p) { p.legs[2].to_site = 0; }},
      {"dummy type on a real leg", PlanRule::Structure,
       [](MissionPlan& p) { p.legs[1].type = EdgeType::Depot; }},
      {"site id out of range", PlanRule::Structure, [](MissionPlan& p) { p.legs[1].to_site = 9; }},
      {"low launch charge", PlanRule::InitialCharge,
       [](MissionPlan& p) { p.legs[0].depart_level = 4; }},
      {"battery jump", PlanRule::BatteryContinuity,
       [](MissionPlan& p) { p.legs[2].depart_level = 4; }},
      {"level above full", PlanRule::LevelBounds,
       [](MissionPlan& p) { p.legs[1].arrive_level = 7; }},
      {"level below empty", PlanRule::LevelBounds,
       [](MissionPlan& p) { p.legs[1].arrive_level = 0; }},
      {"flight keeping too much charge", PlanRule::LevelDrop,
       [](MissionPlan& p) {
         p.legs[1].arrive_level = 4;
         p.legs[2].depart_level = 4;
       }},
      {"ride that drains", PlanRule::Type2Discharge,
       [](MissionPlan& p) {
         p.legs[2].arrive_level = 2;
         p.legs[3].depart_level = 2;
       }},
      {"landing under the flight floor", PlanRule::Type3Floor,
       [](MissionPlan& p) {
         p.legs[3].arrive_level = 2;
         p.legs[4].depart_level = 2;
       }},
      {"ride in a stationary-charger plan", PlanRule::ModeEdge,
       [](MissionPlan& p) { p.mode = Mode::Mscs; }},
      {"dropped visit", PlanRule::Coverage,
       [](MissionPlan& p) { p.legs.erase(p.legs.begin() + 4); }},
      {"padded grand total", PlanRule::TotalTime, [](MissionPlan& p) { p.total_time += 5; }},
      {"shuffled vehicle route", PlanRule::DutyRoute,
       [](MissionPlan& p) { p.ugv_route = {2, 4, 3}; }},
      {"rebalanced leg components", PlanRule::LegComponents,
       [](MissionPlan& p) {
         p.legs[3].charge_time = 25;
         p.legs[3].flight_time = 35;
       }},
  };

  for (const Mutation& mutation : mutations) {
    MissionPlan tampered = clean;
    mutation.apply(tampered);
    const auto violations = verify_plan(tampered, inst);
    bool found = false;
    for (const PlanViolation& v : violations)
      if (v.rule == mutation.expected) found = true;
    if (violations.empty()) {
      return std::string("mutation '") + mutation.name + "' went unnoticed";
    }
    if (!found) {
      std::ostringstream msg;
      msg << "mutation '" << mutation.name << "' was caught, but not as "
          << to_string(mutation.expected) << " (first: " << to_string(violations.front().rule)
          << ")";
      return msg.str();
    }
  }

  std::mt19937_64 rng(909);
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int m = 2 + static_cast<int>(rng() % 3);
    const ProblemInstance random_inst = random_small_instance(rng, n, m);
    const Mode mode = i % 2 == 0 ? Mode::Smcs : Mode::Mscs;
    const GtspGraph g(random_inst, mode);
    const MissionPlan plan = decode(solve_exact_dp(g), g);
    const auto violations = verify_plan(plan, random_inst);
    if (!violations.empty()) {
      std::ostringstream msg;
      msg << "clean plan " << i << " was flagged: " << to_string(violations.front().rule) << ": "
          << violations.front().detail;
      return msg.str();
    }
  }
  return "";
}

}  // namespace

int main() {
  struct Check {
    const char* name;
    std::function<std::string()> run;
  };
  const std::vector<Check> checks = {
      {"exact solver agrees with enumeration", check_exact_vs_enumeration},
      {"cycle reduction reproduces the optimum", check_reduction_pipeline},
      {"adaptive search finds small optima", check_search_finds_small_optima},
      {"free recharging collapses to pure routing", check_free_recharge_collapse},
      {"costs are monotone in overheads and charge rate", check_cost_monotonicity},
      {"ride vs fly-and-charge is decided by speed alone", check_ride_vs_charge_sign},
      {"fleet sizing agrees with enumeration and speed", check_fleet_sizing},
      {"realistic sizes solve inside their budgets", check_scales_to_realistic_sizes},
      {"plan audit catches tampering, trusts clean plans", check_audit_sensitivity},
  };

  int failures = 0;
  for (const Check& check : checks) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = check.run();
    } catch (const std::exception& e) {
      detail = std::string("unexpected exception: ") + e.what();
    }
    const double took = seconds_since(start);
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    if (detail.empty()) {
      line << "PASS  " << check.name << " (" << took << "s)";
    } else {
      line << "FAIL  " << check.name << " (" << took << "s): " << detail;
      ++failures;
    }
    std::cout << line.str() << std::endl;
  }
  return failures;
}
