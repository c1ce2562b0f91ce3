#include "mule/svg.hpp"

#include <algorithm>
#include <sstream>

namespace mule {

namespace {

struct Mapper {
  double min_x = 0, min_y = 0, scale = 1, offset_x = 0, offset_y = 0, height = 0;

  Point map(const Point& p) const {
    // SVG y grows downward; flip so the picture matches plane coordinates.
    return {offset_x + (p.x - min_x) * scale, height - (offset_y + (p.y - min_y) * scale)};
  }
};

Mapper fit(const ProblemInstance& inst, const SvgOptions& options) {
  double min_x = inst.depot.x, max_x = inst.depot.x;
  double min_y = inst.depot.y, max_y = inst.depot.y;
  for (const Site& site : inst.sites) {
    min_x = std::min(min_x, site.position.x);
    max_x = std::max(max_x, site.position.x);
    min_y = std::min(min_y, site.position.y);
    max_y = std::max(max_y, site.position.y);
  }
  const double span_x = std::max(max_x - min_x, 1e-9);
  const double span_y = std::max(max_y - min_y, 1e-9);
  const double usable_x = options.width - 2.0 * options.margin;
  const double usable_y = options.height - 2.0 * options.margin;
  Mapper m;
  m.min_x = min_x;
  m.min_y = min_y;
  m.scale = std::min(usable_x / span_x, usable_y / span_y);
  m.offset_x = options.margin + (usable_x - span_x * m.scale) / 2.0;
  m.offset_y = options.margin + (usable_y - span_y * m.scale) / 2.0;
  m.height = options.height;
  return m;
}

void draw_line(std::ostringstream& svg, const Mapper& mapper, const char* cls, const Point& a,
               const Point& b) {
  const Point pa = mapper.map(a);
  const Point pb = mapper.map(b);
  svg << "  <line class=\"" << cls << "\" x1=\"" << pa.x << "\" y1=\"" << pa.y << "\" x2=\""
      << pb.x << "\" y2=\"" << pb.y << "\"/>\n";
}

}  // namespace

std::string render_svg(const MissionPlan& plan, const ProblemInstance& inst,
                       const SvgOptions& options) {
  const Mapper mapper = fit(inst, options);
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
      << options.height << "\" viewBox=\"0 0 " << options.width << ' ' << options.height
      << "\">\n";
  svg << "  <style>\n"
         "    .type1 { stroke: #1f77b4; stroke-width: 2; fill: none; }\n"
         "    .type2 { stroke: #d62728; stroke-width: 2; stroke-dasharray: 8 4; fill: none; }\n"
         "    .type3 { stroke: #2ca02c; stroke-width: 2; fill: none; }\n"
         "    .ugv { stroke: #d62728; stroke-width: 2; fill: none; }\n"
         "    .site { fill: #ffffff; stroke: #333333; stroke-width: 1.5; }\n"
         "    .station { fill: none; stroke: #2ca02c; stroke-width: 2; }\n"
         "    .depot { fill: #333333; }\n"
         "    text { font-family: sans-serif; font-size: 12px; fill: #111111; }\n"
         "  </style>\n";

  // Vehicle repositioning first, underneath the drone's own path. Segments
  // where the drone rides along are drawn once, by the matching type2 leg.
  for (std::size_t i = 0; i + 1 < plan.ugv_route.size(); ++i) {
    const int a = plan.ugv_route[i];
    const int b = plan.ugv_route[i + 1];
    const bool ridden = std::any_of(plan.legs.begin(), plan.legs.end(), [&](const Leg& leg) {
      return leg.type == EdgeType::TypeII && leg.from_site == a && leg.to_site == b;
    });
    if (!ridden) draw_line(svg, mapper, "ugv", inst.position(a), inst.position(b));
  }

  for (const Leg& leg : plan.legs) {
    const char* cls = nullptr;
    switch (leg.type) {
      case EdgeType::TypeI: cls = "type1"; break;
      case EdgeType::TypeII: cls = "type2"; break;
      case EdgeType::TypeIII: cls = "type3"; break;
      case EdgeType::Depot: break;  // bookkeeping only
    }
    if (cls) draw_line(svg, mapper, cls, inst.position(leg.from_site), inst.position(leg.to_site));
  }

  for (const int site : plan.station_sites) {
    const Point p = mapper.map(inst.position(site));
    svg << "  <circle class=\"station\" cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"10\"/>\n";
  }

  const Point depot = mapper.map(inst.depot);
  svg << "  <rect class=\"depot\" x=\"" << depot.x - 6 << "\" y=\"" << depot.y - 6
      << "\" width=\"12\" height=\"12\"/>\n";

  // Visit order and arrival battery level, in tour order.
  int order = 0;
  for (const Leg& leg : plan.legs) {
    if (leg.to_site == 0) continue;
    ++order;
    const Point p = mapper.map(inst.position(leg.to_site));
    svg << "  <circle class=\"site\" cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"6\"/>\n";
    svg << "  <text x=\"" << p.x + 9 << "\" y=\"" << p.y - 9 << "\">" << order << ':'
        << leg.arrive_level << "</text>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace mule
