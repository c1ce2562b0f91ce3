#include <cmath>

#include "doctest.h"

#include "helpers.hpp"
#include "mule/error.hpp"
#include "mule/instance.hpp"
#include "mule/numeric.hpp"

using namespace mule;
using mule::testing::make_instance;

TEST_CASE("distances and travel times") {
  CHECK(distance({0, 0}, {3, 4}) == doctest::Approx(5.0));
  CHECK(travel_time({0, 0}, {3, 4}, 2.0) == doctest::Approx(2.5));
}

TEST_CASE("level bookkeeping") {
  ProblemInstance inst = make_instance({{100, 0}, {205, 0}});
  inst.uav_speed = 10.0;
  inst.m = 10;
  inst.discharge_rate = 1.0;

  CHECK(inst.percent_per_level() == doctest::Approx(10.0));
  // 10 s flight at 1 %/s = 10% = exactly one level.
  CHECK(levels_consumed(inst, 0, 1) == 1);
  // 10.5 s = 10.5%: rounds up, never flattering the battery.
  CHECK(levels_consumed(inst, 1, 2) == 2);
  CHECK(levels_consumed(inst, 1, 1) == 0);
}

TEST_CASE("position addressing uses 0 for the start point") {
  const ProblemInstance inst = make_instance({{1, 2}, {3, 4}}, {9, 9});
  CHECK(inst.position(0) == Point{9, 9});
  CHECK(inst.position(1) == Point{1, 2});
  CHECK(inst.position(2) == Point{3, 4});
}

TEST_CASE("validation accepts a sane instance") {
  ProblemInstance inst = make_instance({{50, 0}, {0, 50}});
  CHECK(validate_instance(inst).empty());
  CHECK_NOTHROW(validate_instance_or_throw(inst));
}

TEST_CASE("validation flags structural problems") {
  SUBCASE("no sites") {
    const ProblemInstance inst;
    CHECK(!validate_instance(inst).empty());
  }
  SUBCASE("too few battery levels") {
    ProblemInstance inst = make_instance({{10, 0}});
    inst.m = 1;
    CHECK(!validate_instance(inst).empty());
  }
  SUBCASE("non-positive speed") {
    ProblemInstance inst = make_instance({{10, 0}});
    inst.ugv_speed = 0.0;
    CHECK(!validate_instance(inst).empty());
  }
  SUBCASE("negative overheads") {
    ProblemInstance inst = make_instance({{10, 0}});
    inst.t_takeoff = -1.0;
    CHECK(!validate_instance(inst).empty());
  }
  SUBCASE("broken ids") {
    ProblemInstance inst = make_instance({{10, 0}, {20, 0}});
    inst.sites[1].id = 7;
    CHECK(!validate_instance(inst).empty());
  }
  SUBCASE("non-finite coordinate") {
    ProblemInstance inst = make_instance({{10, 0}});
    inst.sites[0].position.x = std::numeric_limits<double>::infinity();
    CHECK(!validate_instance(inst).empty());
  }
}

TEST_CASE("validation needs every pair reachable on one charge") {
  // 2000 m at 10 m/s = 200 s = 200% drained: no battery allows that.
  ProblemInstance inst = make_instance({{0, 0}, {2000, 0}});
  const auto violations = validate_instance(inst);
  REQUIRE(!violations.empty());
  bool mentions_reachability = false;
  for (const auto& v : violations)
    if (v.field.find("reachability") != std::string::npos) mentions_reachability = true;
  CHECK(mentions_reachability);
  CHECK_THROWS_AS(validate_instance_or_throw(inst), Error);
}

TEST_CASE("generator is deterministic and produces valid instances") {
  GeneratorParams params;
  const ProblemInstance a = generate_random_instance(7, 12, 800, 600, params);
  const ProblemInstance b = generate_random_instance(7, 12, 800, 600, params);

  REQUIRE(a.num_sites() == 12);
  CHECK(validate_instance(a).empty());
  CHECK(a.depot == Point{400, 300});
  REQUIRE(b.num_sites() == 12);
  for (int i = 0; i < 12; ++i)
    CHECK(a.sites[static_cast<std::size_t>(i)].position ==
          b.sites[static_cast<std::size_t>(i)].position);

  const ProblemInstance c = generate_random_instance(8, 12, 800, 600, params);
  bool any_differs = false;
  for (int i = 0; i < 12; ++i)
    if (!(a.sites[static_cast<std::size_t>(i)].position ==
          c.sites[static_cast<std::size_t>(i)].position))
      any_differs = true;
  CHECK(any_differs);

  for (const Site& site : a.sites) {
    CHECK(site.position.x >= 0);
    CHECK(site.position.x <= 800);
    CHECK(site.position.y >= 0);
    CHECK(site.position.y <= 600);
  }
}

TEST_CASE("generator refuses areas its batteries cannot cover") {
  GeneratorParams params;
  params.m = 2;
  params.uav_speed = 1.0;  // range per charge is ~50 m; the area is 100 km
  CHECK_THROWS_AS(generate_random_instance(42, 3, 100000, 100000, params), Error);
}
