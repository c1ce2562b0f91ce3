#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mule/alns.hpp"
#include "mule/error.hpp"
#include "mule/exact_solver.hpp"
#include "mule/gtsp_graph.hpp"
#include "mule/instance.hpp"
#include "mule/io.hpp"
#include "mule/mmcs.hpp"
#include "mule/noon_bean.hpp"
#include "mule/plan.hpp"
#include "mule/svg.hpp"
#include "mule/tour.hpp"

namespace {

using namespace mule;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitSizeCap = 3;
constexpr int kExitInfeasible = 4;
constexpr int kExitVerification = 5;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Validation:
    case ErrorCode::Malformed: return kExitValidation;
    case ErrorCode::SizeCap: return kExitSizeCap;
    case ErrorCode::Infeasible: return kExitInfeasible;
  }
  return kExitValidation;
}

EdgeTypeMask parse_types(const std::string& spec, Mode mode) {
  if (spec.empty()) return default_mask(mode);
  EdgeTypeMask mask{false, false, false};
  std::stringstream in(spec);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token == "1") mask.type1 = true;
    else if (token == "2") mask.type2 = true;
    else if (token == "3") mask.type3 = true;
    else throw Error(ErrorCode::Validation, "unknown edge type '" + token + "' (expected 1, 2, 3)");
  }
  if (!mask.type1 && !mask.type2 && !mask.type3)
    throw Error(ErrorCode::Validation, "at least one edge type must stay enabled");
  return mask;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Validation, "cannot write " + path);
  out << text;
}

struct SolverRun {
  GtspTour tour;
  std::int64_t iterations = 0;
  bool hit_time_limit = false;
};

SolverRun run_solver(const GtspGraph& graph, const std::string& solver, std::uint64_t seed,
                     std::int64_t budget, double time_limit) {
  if (solver == "exact") return {solve_exact_dp(graph), 0, false};
  if (solver == "oracle") return {brute_force_oracle(graph), 0, false};
  if (solver == "noon-bean") {
    const NoonBeanResult nb = transform(graph);
    return {lift_tour(solve_tsp(nb.tsp), nb, graph), 0, false};
  }
  if (solver == "alns") {
    SearchConfig config;
    config.seed = seed;
    config.max_iterations = budget;
    config.time_limit_seconds = time_limit;
    HeuristicResult result = solve_heuristic(graph, config);
    return {std::move(result.tour), result.iterations, result.hit_time_limit};
  }
  throw Error(ErrorCode::Validation,
              "unknown solver '" + solver + "' (expected exact, oracle, noon-bean, alns)");
}

struct GenArgs {
  std::uint64_t seed = 1;
  int n = 10;
  double width = 1000.0, height = 1000.0;
  GeneratorParams params;
  std::string output;
};

int run_gen(const GenArgs& args) {
  const ProblemInstance inst =
      generate_random_instance(args.seed, args.n, args.width, args.height, args.params);
  write_text(args.output, instance_to_json(inst).dump(2) + "\n");
  if (!args.output.empty() && args.output != "-")
    std::cout << "wrote " << args.output << " (" << args.n << " sites, digest "
              << digest_hex(instance_digest(inst)) << ")\n";
  return kExitOk;
}

struct SolveArgs {
  std::string instance_path;
  std::string mode = "smcs";
  std::string solver = "alns";
  std::string types;
  std::uint64_t seed = 1;
  std::int64_t budget = 10000;
  double time_limit = 60.0;
  std::string output;
};

int run_solve(const SolveArgs& args) {
  const ProblemInstance inst = load_instance(args.instance_path);
  validate_instance_or_throw(inst);
  const Mode mode = mode_from_string(args.mode);
  const EdgeTypeMask mask = parse_types(args.types, mode);
  const GtspGraph graph(inst, mode, mask);

  const auto start = std::chrono::steady_clock::now();
  SolverRun run = run_solver(graph, args.solver, args.seed, args.budget, args.time_limit);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  SolutionDocument doc;
  doc.instance = inst;
  doc.digest = digest_hex(instance_digest(inst));
  doc.solver = args.solver;
  doc.mode = mode;
  doc.mask = mask;
  doc.seed = args.seed;
  doc.wall_clock_seconds = wall;
  doc.tour = std::move(run.tour);
  doc.plan = decode(doc.tour, graph);
  if (args.solver == "alns") {
    doc.config["max_iterations"] = static_cast<double>(args.budget);
    doc.config["time_limit_seconds"] = args.time_limit;
    doc.config["iterations_run"] = static_cast<double>(run.iterations);
    doc.config["hit_time_limit"] = run.hit_time_limit ? 1.0 : 0.0;
  }

  const std::vector<std::string> problems = verify_solution(doc);
  if (!problems.empty()) {
    std::cerr << "solution failed verification:\n";
    for (const std::string& p : problems) std::cerr << "  " << p << '\n';
    return kExitVerification;
  }

  write_text(args.output, solution_to_json(doc).dump(2) + "\n");
  std::ostringstream summary;
  summary << "solver=" << args.solver << " mode=" << to_string(mode)
          << " total=" << doc.plan.total_time << "s legs=" << doc.plan.legs.size()
          << " wall=" << wall << "s\n";
  if (args.output.empty() || args.output == "-") {
    std::cerr << summary.str();
  } else {
    std::cout << "wrote " << args.output << ": " << summary.str();
  }
  return kExitOk;
}

struct MinUgvArgs {
  std::string solution_path;
  double ugv_speed = 1.0;
  std::string elapsed = "wall";
  std::string output;
};

int run_min_ugvs(const MinUgvArgs& args) {
  const SolutionDocument doc = load_solution(args.solution_path);
  const std::vector<std::string> problems = verify_solution(doc);
  if (!problems.empty()) {
    std::cerr << "refusing to schedule an unverified solution:\n";
    for (const std::string& p : problems) std::cerr << "  " << p << '\n';
    return kExitVerification;
  }

  ElapsedModel model;
  if (args.elapsed == "wall") model = ElapsedModel::WallClock;
  else if (args.elapsed == "travel") model = ElapsedModel::TravelOnly;
  else throw Error(ErrorCode::Validation, "unknown clock '" + args.elapsed + "' (expected wall or travel)");

  const MmcsInstance mmcs = build_mmcs_instance(doc.plan, doc.instance, args.ugv_speed, model);
  const MmcsResult result = min_ugv_count(mmcs);
  nlohmann::json out = mmcs_to_json(mmcs, result);
  out["ugv_speed"] = args.ugv_speed;
  out["elapsed"] = args.elapsed;
  write_text(args.output, out.dump(2) + "\n");
  if (!args.output.empty() && args.output != "-")
    std::cout << "wrote " << args.output << ": " << result.ugv_count << " vehicle(s) for "
              << mmcs.size() << " duties\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string solution_path;
};

int run_verify(const VerifyArgs& args) {
  const SolutionDocument doc = load_solution(args.solution_path);
  const std::vector<std::string> problems = verify_solution(doc);
  if (problems.empty()) {
    std::cout << "ok\n";
    return kExitOk;
  }
  for (const std::string& p : problems) std::cout << p << '\n';
  return kExitVerification;
}

struct PlotArgs {
  std::string solution_path;
  std::string output;
  int width = 800;
  int height = 600;
};

int run_plot(const PlotArgs& args) {
  const SolutionDocument doc = load_solution(args.solution_path);
  SvgOptions options;
  options.width = args.width;
  options.height = args.height;
  write_text(args.output, render_svg(doc.plan, doc.instance, options));
  if (!args.output.empty() && args.output != "-") std::cout << "wrote " << args.output << '\n';
  return kExitOk;
}

struct BenchArgs {
  std::string sizes = "10,20";
  int seeds = 3;
  std::string mode = "smcs";
  std::string solver = "alns";
  std::int64_t budget = 10000;
  double time_limit = 60.0;
  double width = 1000.0, height = 1000.0;
  GeneratorParams params;
  std::string output;
};

int run_bench(const BenchArgs& args) {
  const Mode mode = mode_from_string(args.mode);
  std::vector<int> sizes;
  std::stringstream in(args.sizes);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      sizes.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw Error(ErrorCode::Validation, "bad size '" + token + "' in --sizes");
    }
  }
  if (sizes.empty()) throw Error(ErrorCode::Validation, "--sizes must name at least one size");

  std::ostringstream csv;
  csv << "n,seed,solver,mode,total_time,wall_seconds,iterations,verified\n";
  for (const int n : sizes) {
    for (int seed = 1; seed <= args.seeds; ++seed) {
      const std::uint64_t instance_seed =
          static_cast<std::uint64_t>(seed) * 1000003ULL + static_cast<std::uint64_t>(n);
      const ProblemInstance inst =
          generate_random_instance(instance_seed, n, args.width, args.height, args.params);
      const GtspGraph graph(inst, mode);
      const auto start = std::chrono::steady_clock::now();
      const SolverRun run =
          run_solver(graph, args.solver, static_cast<std::uint64_t>(seed), args.budget,
                     args.time_limit);
      const double wall =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const MissionPlan plan = decode(run.tour, graph);
      const bool clean = verify_plan(plan, inst).empty();
      csv << n << ',' << seed << ',' << args.solver << ',' << to_string(mode) << ','
          << plan.total_time << ',' << wall << ',' << run.iterations << ','
          << (clean ? 1 : 0) << '\n';
    }
  }
  write_text(args.output, csv.str());
  if (!args.output.empty() && args.output != "-") std::cout << "wrote " << args.output << '\n';
  return kExitOk;
}

void add_generator_options(CLI::App* cmd, GeneratorParams& params) {
  cmd->add_option("--m", params.m, "battery levels");
  cmd->add_option("--r", params.r, "seconds to recharge one percent");
  cmd->add_option("--uav-speed", params.uav_speed, "drone speed, m/s");
  cmd->add_option("--ugv-speed", params.ugv_speed, "ground vehicle speed, m/s");
  cmd->add_option("--t-takeoff", params.t_takeoff, "takeoff overhead, s");
  cmd->add_option("--t-land", params.t_land, "landing overhead, s");
  cmd->add_option("--discharge-rate", params.discharge_rate, "percent drained per flight second");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mule: minimum-time drone tours over recharging vehicles and stations"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--seed", gen_args.seed, "random seed");
  gen->add_option("-n,--sites", gen_args.n, "number of sites")->required();
  gen->add_option("--width", gen_args.width, "area width, m");
  gen->add_option("--height", gen_args.height, "area height, m");
  add_generator_options(gen, gen_args.params);
  gen->add_option("-o,--output", gen_args.output, "instance file (default stdout)");

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "plan a minimum-time tour");
  solve->add_option("-i,--instance", solve_args.instance_path, "instance file")->required();
  solve->add_option("--mode", solve_args.mode, "mscs or smcs (default smcs)");
  solve->add_option("--solver", solve_args.solver, "exact, oracle, noon-bean, alns (default alns)");
  solve->add_option("--types", solve_args.types, "edge types to allow, e.g. 1,3 (default per mode)");
  solve->add_option("--seed", solve_args.seed, "search seed");
  solve->add_option("--budget", solve_args.budget, "search iteration budget");
  solve->add_option("--time-limit", solve_args.time_limit, "search wall-clock limit, s");
  solve->add_option("-o,--output", solve_args.output, "solution file (default stdout)");

  MinUgvArgs min_args;
  CLI::App* min_ugvs = app.add_subcommand("min-ugvs", "fewest slow vehicles so the drone never waits");
  min_ugvs->add_option("-s,--solution", min_args.solution_path, "solution file")->required();
  min_ugvs->add_option("--ugv-speed", min_args.ugv_speed, "fleet speed, m/s")->required();
  min_ugvs->add_option("--elapsed", min_args.elapsed, "clock between duties: wall or travel");
  min_ugvs->add_option("-o,--output", min_args.output, "schedule file (default stdout)");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "audit a stored solution");
  verify->add_option("-s,--solution", verify_args.solution_path, "solution file")->required();

  PlotArgs plot_args;
  CLI::App* plot = app.add_subcommand("plot", "render a solution as SVG");
  plot->add_option("-s,--solution", plot_args.solution_path, "solution file")->required();
  plot->add_option("-o,--output", plot_args.output, "svg file (default stdout)");
  plot->add_option("--width", plot_args.width, "pixels");
  plot->add_option("--height", plot_args.height, "pixels");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "time the solvers on random instances (CSV)");
  bench->add_option("--sizes", bench_args.sizes, "comma-separated site counts (default 10,20)");
  bench->add_option("--seeds", bench_args.seeds, "seeds per size (default 3)");
  bench->add_option("--mode", bench_args.mode, "mscs or smcs");
  bench->add_option("--solver", bench_args.solver, "exact, oracle, noon-bean, alns");
  bench->add_option("--budget", bench_args.budget, "search iteration budget");
  bench->add_option("--time-limit", bench_args.time_limit, "search wall-clock limit, s");
  bench->add_option("--width", bench_args.width, "area width, m");
  bench->add_option("--height", bench_args.height, "area height, m");
  add_generator_options(bench, bench_args.params);
  bench->add_option("-o,--output", bench_args.output, "csv file (default stdout)");

  try {
    app.parse(argc, argv);
    if (*gen) return run_gen(gen_args);
    if (*solve) return run_solve(solve_args);
    if (*min_ugvs) return run_min_ugvs(min_args);
    if (*verify) return run_verify(verify_args);
    if (*plot) return run_plot(plot_args);
    if (*bench) return run_bench(bench_args);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitValidation;
  }
}
