#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mule {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Straight-line distance in meters.
double distance(const Point& a, const Point& b);

// Travel time in seconds at a constant speed. Requires speed > 0.
double travel_time(const Point& a, const Point& b, double speed);

struct Site {
  int id = 0;      // 1-based, contiguous
  Point position;  // meters
};

// Physical problem data. Battery charge is discretized into `m` levels:
// level k stands for k * (100/m) percent, so level m is a full battery and
// level 1 is the lowest charge any plan is allowed to reach.
struct ProblemInstance {
  std::vector<Site> sites;
  Point depot;
  double uav_speed = 10.0;      // meters/second
  double ugv_speed = 10.0;      // meters/second
  int m = 10;                   // number of battery levels
  double r = 1.0;               // seconds to recharge one percent
  double t_takeoff = 4.0;       // seconds
  double t_land = 4.0;          // seconds
  double discharge_rate = 1.0;  // percent drained per second of flight

  int num_sites() const { return static_cast<int>(sites.size()); }
  double percent_per_level() const { return 100.0 / m; }

  // Locations are addressed as 0 = depot, 1..n = sites.
  const Point& position(int site_id) const;
  double uav_time(int a, int b) const;
  double ugv_time(int a, int b) const;
};

// Battery levels drained by a direct flight between two locations
// (0 = depot allowed), rounded up to whole levels. The rounding is
// conservative: it never overstates the charge remaining on arrival.
int levels_consumed(const ProblemInstance& inst, int site_a, int site_b);

struct Violation {
  std::string field;
  std::string message;
};

// Checks structural invariants (m >= 2, positive speeds, contiguous ids,
// finite coordinates, non-negative times) plus full-charge reachability:
// levels_consumed must stay below m for every location pair, depot included.
std::vector<Violation> validate_instance(const ProblemInstance& inst);

// Throws Error(Validation) listing every violation.
void validate_instance_or_throw(const ProblemInstance& inst);

struct GeneratorParams {
  int m = 10;
  double r = 1.0;
  double uav_speed = 10.0;
  double ugv_speed = 10.0;
  double t_takeoff = 4.0;
  double t_land = 4.0;
  double discharge_rate = 1.0;
};

// n sites drawn uniformly in a width x height rectangle with the depot at
// the center. Deterministic for a fixed seed. Sites that would break
// full-charge reachability are re-drawn a bounded number of times; if the
// area/speed combination cannot satisfy reachability the generator throws
// Error(Validation) with a diagnostic.
ProblemInstance generate_random_instance(std::uint64_t seed, int n, double area_width,
                                         double area_height,
                                         const GeneratorParams& params = {});

}  // namespace mule
