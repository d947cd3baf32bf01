#include <stdexcept>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "brute_force.hpp"
#include "cli.hpp"
#include "coaw/io.hpp"
#include "coaw/oracle.hpp"
#include "coaw/runner.hpp"

using namespace coaw;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("coaw_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::size_t line_count(const fs::path& p) {
  std::ifstream in(p);
  std::size_t n = 0;
  std::string line;
  while (std::getline(in, line)) ++n;
  return n;
}

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "coaw");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = cli::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

void write_text(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_SUITE("runner") {
  TEST_CASE("p1 run yields a feasible nondominated archive") {
    RunConfig cfg;
    cfg.n_weight_samples = 10;
    cfg.oracle.resolution = 201;
    const auto report = run_coaw(cfg, RunOptions{.write = false});
    REQUIRE_FALSE(report.archive.empty());
    CHECK(report.runs.size() == 10);
    const auto p1 = get_builtin("p1");
    for (const auto& e : report.archive) CHECK(evaluate(p1, e.x).feasible());
    const auto objs = objectives_of(report.archive);
    CHECK(pareto_filter(objs).size() == objs.size());
    CHECK(std::is_sorted(objs.begin(), objs.end()));
    for (std::size_t i = 0; i < report.runs.size(); ++i) {
      CHECK(report.runs[i].index == i);
      CHECK(report.runs[i].seed == child_seed(42, i));
    }
  }

  TEST_CASE("a single weight sample contributes at most one run's worth of points") {
    RunConfig cfg;
    cfg.n_weight_samples = 1;
    cfg.oracle.resolution = 51;
    const auto report = run_coaw(cfg, RunOptions{.write = false});
    CHECK(report.runs.size() == 1);
    CHECK(report.archive.size() <= static_cast<std::size_t>(cfg.coa.max_cuckoos) + 1);
  }

  TEST_CASE("execution order and threading do not change the report") {
    RunConfig cfg;
    cfg.problem_id = "p3";
    cfg.n_weight_samples = 12;
    cfg.oracle.resolution = 101;
    cfg.record_runtime = false;
    const auto base = run_coaw(cfg, RunOptions{.write = false});

    RunOptions reversed{.write = false};
    for (std::size_t k = 12; k-- > 0;) reversed.execution_order.push_back(k);
    const auto rev = run_coaw(cfg, reversed);
    const auto threaded = run_coaw(cfg, RunOptions{.threads = 4, .write = false});
    CHECK(metrics_json(rev, cfg) == metrics_json(base, cfg));
    CHECK(metrics_json(threaded, cfg) == metrics_json(base, cfg));
    CHECK(front_to_csv(rev.archive, 2, 2) == front_to_csv(base.archive, 2, 2));
    CHECK(front_to_csv(threaded.archive, 2, 2) == front_to_csv(base.archive, 2, 2));

    RunOptions bad{.write = false};
    bad.execution_order = {0, 1, 1};
    CHECK_THROWS_AS(run_coaw(cfg, bad), std::invalid_argument);
  }

  TEST_CASE("write_outputs file contract") {
    const auto dir = scratch("outputs");
    RunConfig cfg;
    cfg.output_dir = dir;
    cfg.record_runtime = false;
    RunReport report;
    report.archive = {{{0.0, 2.0}, {0.0, 2.0}}, {{2.0, 0.0}, {2.0, 0.0}}, {{0.6, 0.6}, {0.6, 0.6}}};
    report.oracle_front = report.archive;
    report.metrics = front_metrics(objectives_of(report.archive), objectives_of(report.oracle_front));
    write_outputs(report, cfg);

    CHECK(line_count(dir / "front.csv") == 4);
    const auto csv = read_text_file(dir / "front.csv");
    CHECK(csv.rfind("x1,x2,f1,f2\n0,2,0,2\n0.6,0.6,0.6,0.6\n2,0,2,0\n", 0) == 0);
    CHECK(fs::exists(dir / "oracle_front.csv"));
    CHECK_FALSE(fs::exists(dir / "front.gp"));

    const auto j = nlohmann::json::parse(read_text_file(dir / "metrics.json"));
    CHECK(j.at("generational_distance").get<double>() == 0.0);
    CHECK(j.at("extreme_error").get<double>() == 0.0);
    CHECK(j.at("n_front_points").get<int>() == 3);
    CHECK(j.at("runtime_seconds").get<double>() == 0.0);
    CHECK(j.contains("spread"));
    CHECK(j.at("per_run").is_array());

    cfg.emit_plot_data = true;
    write_outputs(report, cfg);
    const auto gp = read_text_file(dir / "front.gp");
    CHECK(gp.find("oracle_front.csv") != std::string::npos);
    CHECK(gp.find("front.csv") != std::string::npos);
    for (const auto& e : fs::directory_iterator(dir)) CHECK(e.path().extension() != ".tmp");
  }

  TEST_CASE("front CSV round-trips and stays nondominated") {
    RunConfig cfg;
    cfg.n_weight_samples = 8;
    cfg.oracle.resolution = 51;
    const auto report = run_coaw(cfg, RunOptions{.write = false});
    const auto text = front_to_csv(report.archive, 2, 2);
    const auto back = front_from_csv(text);
    REQUIRE(back.size() == report.archive.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
      CHECK(back[i].x == report.archive[i].x);
      CHECK(back[i].f == report.archive[i].f);
    }
    const auto objs = objectives_of(back);
    CHECK(pareto_filter(objs).size() == objs.size());
    CHECK(front_to_csv(back, 2, 2) == text);
  }

  TEST_CASE("front CSV parse errors") {
    CHECK_THROWS(front_from_csv(""));
    CHECK_THROWS(front_from_csv("x1,y1\n1,2\n"));
    CHECK_THROWS(front_from_csv("x1,f1,f2\n1,2\n"));
    CHECK_THROWS(front_from_csv("x1,f1,f2\n1,2,abc\n"));
    CHECK(front_from_csv("f1,f2\n1,2\n")[0].f == Vector{1, 2});
  }

  TEST_CASE("more weight samples do not worsen p1 generational distance") {
    const auto reference = objectives_of(grid_reference_front(get_builtin("p1"), OracleConfig{}));
    std::vector<double> diffs;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      RunConfig cfg;
      cfg.master_seed = seed;
      cfg.oracle.resolution = 3;
      auto gd = [&](int n) {
        cfg.n_weight_samples = n;
        const auto r = run_coaw(cfg, RunOptions{.write = false});
        return coaw::testing::naive_gd(objectives_of(r.archive), reference);
      };
      diffs.push_back(gd(50) - gd(10));
    }
    double mean = 0.0;
    for (double d : diffs) mean += d;
    mean /= diffs.size();
    double var = 0.0;
    for (double d : diffs) var += (d - mean) * (d - mean);
    const double stderr_mean = std::sqrt(var / (diffs.size() - 1) / diffs.size());
    // Not significantly worse: mean paired change within two standard errors of zero or negative.
    CHECK(mean <= 2.0 * stderr_mean);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("run writes the three outputs") {
    const auto dir = scratch("cli_run");
    write_text(dir / "p1.cfg", "problem_id = p1\noutput_dir = \"" + (dir / "out").string() + "\"\n");
    const auto r = run_cli({"run", "--config", (dir / "p1.cfg").string()});
    CHECK(r.status == 0);
    CHECK(fs::exists(dir / "out" / "front.csv"));
    CHECK(fs::exists(dir / "out" / "oracle_front.csv"));
    CHECK(fs::exists(dir / "out" / "metrics.json"));
    CHECK_FALSE(fs::exists(dir / "out" / "front.gp"));
  }

  TEST_CASE("config errors exit with status 2") {
    const auto dir = scratch("cli_bad");
    write_text(dir / "bad.cfg", "coa.min_eggs = 5\ncoa.max_eggs = 4\n");
    auto r = run_cli({"run", "--config", (dir / "bad.cfg").string()});
    CHECK(r.status == 2);
    CHECK(r.err.find("coa.min_eggs must be <= coa.max_eggs") != std::string::npos);

    write_text(dir / "unknown.cfg", "coa.speed = 3\n");
    CHECK(run_cli({"run", "--config", (dir / "unknown.cfg").string()}).status == 2);
    CHECK(run_cli({"run", "--config", (dir / "missing.cfg").string()}).status == 2);
    CHECK(run_cli({"run"}).status == 2);
    CHECK(run_cli({"frobnicate"}).status == 2);
    CHECK(run_cli({"oracle", "--problem", "p7"}).status == 2);
    CHECK(run_cli({"oracle", "--problem", "p1", "--resolution", "1"}).status == 2);
  }

  TEST_CASE("runtime errors exit with status 1") {
    const auto dir = scratch("cli_runtime");
    const auto r = run_cli({"metrics", "--front", (dir / "nope.csv").string(), "--reference", (dir / "nope.csv").string()});
    CHECK(r.status == 1);
    CHECK_FALSE(r.err.empty());
  }

  TEST_CASE("oracle and metrics subcommands") {
    const auto dir = scratch("cli_oracle");
    auto r = run_cli({"oracle", "--problem", "p3", "--resolution", "201", "--output-dir", dir.string()});
    REQUIRE(r.status == 0);
    const auto front = read_front_csv(dir / "oracle_front.csv");
    CHECK_FALSE(front.empty());
    CHECK(read_text_file(dir / "oracle_front.csv").rfind("x1,x2,f1,f2\n", 0) == 0);

    const auto csv = (dir / "oracle_front.csv").string();
    r = run_cli({"metrics", "--front", csv, "--reference", csv});
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("generational_distance").get<double>() == 0.0);
    CHECK(j.at("extreme_error").get<double>() == 0.0);
  }

  TEST_CASE("help exits cleanly") { CHECK(run_cli({"--help"}).status == 0); }
}
