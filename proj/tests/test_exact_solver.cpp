#include <random>

#include "doctest.h"

#include "helpers.hpp"
#include "mule/error.hpp"
#include "mule/exact_solver.hpp"
#include "mule/numeric.hpp"
#include "mule/tour.hpp"

using namespace mule;
using mule::testing::make_instance;

TEST_CASE("a single site costs nothing to visit") {
  ProblemInstance inst = make_instance({{30, 40}});
  for (const Mode mode : {Mode::Smcs, Mode::Mscs}) {
    const GtspGraph g(inst, mode);
    const GtspTour tour = solve_exact_dp(g);
    CHECK(check_tour(tour, g).empty());
    CHECK(tour.cost == doctest::Approx(0.0));
    CHECK(tour.vertices.size() == 3);  // depot, the site, depot
  }
}

TEST_CASE("two sites fly direct when the battery allows it") {
  // 400 m apart at 10 m/s: 40 s and 2 of 5 levels. Rides and charging cost
  // at least 8 s of overhead, so the bare flight wins in both modes.
  ProblemInstance inst = make_instance({{0, 0}, {400, 0}});
  inst.uav_speed = 10.0;
  inst.ugv_speed = 10.0;
  inst.m = 5;
  inst.r = 1.0;
  for (const Mode mode : {Mode::Smcs, Mode::Mscs}) {
    const GtspGraph g(inst, mode);
    const GtspTour tour = solve_exact_dp(g);
    CHECK(check_tour(tour, g).empty());
    CHECK(tour.cost == doctest::Approx(40.0));
  }
}

TEST_CASE("collinear sites chain direct flights") {
  ProblemInstance inst = make_instance({{0, 0}, {400, 0}, {800, 0}});
  inst.uav_speed = 10.0;
  inst.m = 5;
  const GtspGraph g(inst, Mode::Smcs);
  const GtspTour tour = solve_exact_dp(g);
  CHECK(check_tour(tour, g).empty());
  // 5 -> 3 -> 1: two 40 s hops, battery just lasts.
  CHECK(tour.cost == doctest::Approx(80.0));
}

TEST_CASE("subset relaxation matches full enumeration") {
  std::mt19937_64 seeds(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(seeds() % 5);  // 2..6
    const int m = 2 + static_cast<int>(seeds() % 3);  // 2..4
    GeneratorParams params;
    params.m = m;
    params.ugv_speed = 4.0 + static_cast<double>(seeds() % 5);
    params.r = 0.5 * static_cast<double>(seeds() % 4);
    const ProblemInstance inst = generate_random_instance(seeds(), n, 600, 600, params);
    for (const Mode mode : {Mode::Smcs, Mode::Mscs}) {
      const GtspGraph g(inst, mode);
      const GtspTour fast = solve_exact_dp(g);
      const GtspTour slow = brute_force_oracle(g);
      CHECK(check_tour(fast, g).empty());
      CHECK(check_tour(slow, g).empty());
      CHECK(nearly_equal(fast.cost, slow.cost));
    }
  }
}

TEST_CASE("restricting edge types never helps") {
  std::mt19937_64 seeds(77);
  for (int trial = 0; trial < 20; ++trial) {
    const ProblemInstance inst = generate_random_instance(seeds(), 5, 500, 500);
    const GtspTour with_rides = solve_exact_dp(GtspGraph(inst, Mode::Smcs));
    const GtspTour without = solve_exact_dp(GtspGraph(inst, Mode::Mscs));
    CHECK(without.cost >= with_rides.cost - 1e-9);
  }
}

TEST_CASE("cluster cap is enforced") {
  std::vector<Point> points;
  for (int i = 0; i < 16; ++i) points.push_back({static_cast<double>(i), 0.0});
  ProblemInstance inst = make_instance(points);
  inst.m = 2;
  const GtspGraph g(inst, Mode::Smcs);  // 17 clusters with the start point
  CHECK_THROWS_AS(solve_exact_dp(g), Error);
  try {
    solve_exact_dp(g);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeCap);
  }
}

TEST_CASE("an impossible instance reports infeasibility") {
  // Direct flights only, but every hop drains 3 of 5 levels: after one hop
  // the battery is too low for a second, and site 3 is out of range anyway.
  ProblemInstance inst = make_instance({{0, 0}, {600, 0}, {1200, 0}});
  inst.uav_speed = 10.0;
  inst.m = 5;
  const GtspGraph g(inst, Mode::Smcs, EdgeTypeMask{true, false, false});
  CHECK_THROWS_AS(solve_exact_dp(g), Error);
  try {
    solve_exact_dp(g);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Infeasible);
  }
}
