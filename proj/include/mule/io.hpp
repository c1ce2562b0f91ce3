#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "mule/gtsp_graph.hpp"
#include "mule/instance.hpp"
#include "mule/mmcs.hpp"
#include "mule/plan.hpp"
#include "mule/tour.hpp"

namespace mule {

// String forms used in files and on the command line. The parsers throw
// Error(Validation) on unknown names.
Mode mode_from_string(const std::string& name);
EdgeType edge_type_from_string(const std::string& name);

nlohmann::json instance_to_json(const ProblemInstance& inst);
// Throws Error(Malformed) when keys are missing or mistyped. Does not run
// validate_instance; callers decide how strict to be.
ProblemInstance instance_from_json(const nlohmann::json& j);

ProblemInstance load_instance(const std::string& path);
void save_instance(const ProblemInstance& inst, const std::string& path);

// FNV-1a over the canonical serialization: key-sorted, no whitespace,
// shortest round-trip number forms. Two instances share a digest iff they
// serialize identically.
std::uint64_t instance_digest(const ProblemInstance& inst);
std::string digest_hex(std::uint64_t digest);

// Everything needed to audit a solver run later: the instance itself plus
// its digest, what produced the tour, and the decoded plan.
struct SolutionDocument {
  ProblemInstance instance;
  std::string digest;  // hex form of instance_digest at solve time
  std::string solver;  // "exact", "oracle", "noon-bean", "alns"
  Mode mode = Mode::Smcs;
  EdgeTypeMask mask;
  std::uint64_t seed = 0;
  std::map<std::string, double> config;  // numeric solver knobs, by name
  double wall_clock_seconds = 0.0;
  GtspTour tour;
  MissionPlan plan;
};

nlohmann::json solution_to_json(const SolutionDocument& doc);
SolutionDocument solution_from_json(const nlohmann::json& j);
SolutionDocument load_solution(const std::string& path);
void save_solution(const SolutionDocument& doc, const std::string& path);

// Full audit of a stored solution: instance validity, digest match, tour
// structure against a freshly built graph, plan semantics, and agreement
// between tour, plan, and the stored totals. Empty result means clean.
std::vector<std::string> verify_solution(const SolutionDocument& doc);

nlohmann::json mmcs_to_json(const MmcsInstance& inst, const MmcsResult& result);

}  // namespace mule
