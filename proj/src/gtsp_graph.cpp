#include "mule/gtsp_graph.hpp"

#include <ostream>

namespace mule {

const char* to_string(Mode mode) { return mode == Mode::Mscs ? "mscs" : "smcs"; }

const char* to_string(EdgeType type) {
  switch (type) {
    case EdgeType::TypeI: return "I";
    case EdgeType::TypeII: return "II";
    case EdgeType::TypeIII: return "III";
    case EdgeType::Depot: return "D";
  }
  return "?";
}

EdgeTypeMask default_mask(Mode mode) {
  if (mode == Mode::Mscs) return {true, false, true};
  return {true, true, true};
}

GtspGraph::GtspGraph(const ProblemInstance& instance, Mode mode, EdgeTypeMask mask)
    : instance_(instance), mode_(mode), mask_(mask), n_(instance.num_sites()), m_(instance.m) {
  assert(n_ >= 1 && m_ >= 1);
  const std::size_t pairs = static_cast<std::size_t>(n_ + 1) * (n_ + 1);
  tuav_.resize(pairs);
  tugv_.resize(pairs);
  drop_.resize(pairs);
  for (int a = 0; a <= n_; ++a) {
    for (int b = 0; b <= n_; ++b) {
      const std::size_t at = pair_index(a, b);
      tuav_[at] = instance_.uav_time(a, b);
      tugv_[at] = instance_.ugv_time(a, b);
      drop_[at] = levels_consumed(instance_, a, b);
    }
  }
}

std::size_t GtspGraph::count_edges() const {
  std::size_t count = 0;
  const int nv = num_vertices();
  for (VertexId u = 0; u < nv; ++u) {
    for (VertexId v = 0; v < nv; ++v) {
      if (edge(u, v)) ++count;
    }
  }
  return count;
}

void GtspGraph::dump_edges(std::ostream& os) const {
  const int nv = num_vertices();
  char line[128];
  for (VertexId u = 0; u < nv; ++u) {
    for (VertexId v = 0; v < nv; ++v) {
      const auto e = edge(u, v);
      if (!e) continue;
      std::snprintf(line, sizeof(line), "%d %d %d %d %s %.17g\n", site_of(u), level_of(u),
                    site_of(v), level_of(v), to_string(e->type), e->cost);
      os << line;
    }
  }
}

}  // namespace mule
