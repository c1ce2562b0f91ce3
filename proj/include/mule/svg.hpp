#pragma once

#include <string>

#include "mule/instance.hpp"
#include "mule/plan.hpp"

namespace mule {

struct SvgOptions {
  int width = 800;
  int height = 600;
  double margin = 40.0;  // pixels kept clear around the drawing
};

// Standalone SVG picture of a mission: one line per flown or ridden leg
// (classes "type1", "type2", "type3"), solid "ugv" lines where the vehicle
// repositions on its own, a square depot, and one labelled circle per site
// ("visit order:arrival level"). Stationary chargers get a "station" ring.
// Depot legs are bookkeeping, not movement, so they draw nothing.
std::string render_svg(const MissionPlan& plan, const ProblemInstance& inst,
                       const SvgOptions& options = {});

}  // namespace mule
