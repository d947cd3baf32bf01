#include "cli.hpp"

#include <filesystem>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "coaw/config.hpp"
#include "coaw/io.hpp"
#include "coaw/oracle.hpp"
#include "coaw/pareto.hpp"
#include "coaw/runner.hpp"

namespace coaw::cli {

namespace {

int cmd_run(const std::string& config_path, unsigned threads, std::ostream& out) {
  const auto cfg = load_config(config_path);
  RunOptions opts;
  opts.threads = threads;
  const auto report = run_coaw(cfg, opts);
  out << "problem " << cfg.problem_id << ": " << report.archive.size() << " front points";
  if (!report.archive.empty()) {
    out << ", generational distance " << format_double(report.metrics.generational_distance)
        << ", extreme error " << format_double(report.metrics.extreme_error);
  }
  out << "\nwrote " << (cfg.output_dir / "front.csv").string() << '\n';
  return kExitOk;
}

int cmd_oracle(const std::string& problem_id, int resolution, double box_extent,
               const std::filesystem::path& output_dir, std::ostream& out) {
  ProblemSpec problem;
  OracleConfig oc{resolution};
  try {
    problem = get_builtin(problem_id, box_extent);
    oc.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const auto front = grid_reference_front(problem, oc);
  const std::pair<std::string, std::string> file{"oracle_front.csv", front_to_csv(front, problem.dim, problem.n_obj)};
  write_files_atomically(output_dir, std::span(&file, 1));
  out << "wrote " << front.size() << " points to " << (output_dir / "oracle_front.csv").string() << '\n';
  return kExitOk;
}

int cmd_metrics(const std::string& front_path, const std::string& reference_path, std::ostream& out) {
  const auto front = read_front_csv(front_path);
  const auto reference = read_front_csv(reference_path);
  if (front.empty() || reference.empty()) throw std::runtime_error("metrics need nonempty front and reference files");
  const auto m = front_metrics(objectives_of(front), objectives_of(reference));
  nlohmann::ordered_json j;
  j["generational_distance"] = m.generational_distance;
  j["extreme_error"] = m.extreme_error;
  j["spread"] = m.spread ? nlohmann::ordered_json(*m.spread) : nullptr;
  j["n_front_points"] = front.size();
  out << j.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cuckoo optimization with additive weighting for multi-objective problems", "coaw"};
  app.require_subcommand(1);

  std::string config_path;
  unsigned threads = 1;
  auto* run = app.add_subcommand("run", "run the full weight-sampling procedure from a config file");
  run->add_option("--config", config_path, "flat key = value config file")->required();
  run->add_option("--threads", threads, "weight samples executed in parallel")->check(CLI::PositiveNumber);

  std::string problem_id;
  int resolution = OracleConfig{}.resolution;
  double box_extent = kDefaultBoxExtent;
  std::string output_dir = ".";
  auto* oracle = app.add_subcommand("oracle", "write the brute-force grid reference front");
  oracle->add_option("--problem", problem_id, "built-in problem id (p1, p2, p3)")->required();
  oracle->add_option("--resolution", resolution, "grid points per dimension");
  oracle->add_option("--box-extent", box_extent, "extent of the box in unbounded directions");
  oracle->add_option("--output-dir", output_dir, "directory receiving oracle_front.csv");

  std::string front_path;
  std::string reference_path;
  auto* metrics = app.add_subcommand("metrics", "compare a front CSV against a reference CSV");
  metrics->add_option("--front", front_path, "approximation front CSV")->required();
  metrics->add_option("--reference", reference_path, "reference front CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfigError;
  }

  try {
    if (run->parsed()) return cmd_run(config_path, threads, out);
    if (oracle->parsed()) return cmd_oracle(problem_id, resolution, box_extent, output_dir, out);
    if (metrics->parsed()) return cmd_metrics(front_path, reference_path, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
  return kExitConfigError;
}

}  // namespace coaw::cli
