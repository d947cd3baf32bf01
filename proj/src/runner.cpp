#include "coaw/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "json.hpp"

#include "coaw/io.hpp"
#include "coaw/oracle.hpp"

namespace coaw {

namespace {

// Everything one weight sample contributes to the archive.
struct SampleOutput {
  RunSummary summary;
  std::vector<std::pair<FrontPoint, bool>> candidates;
};

SampleOutput run_sample(const ProblemSpec& problem, const RunConfig& config, std::size_t k) {
  SampleOutput out;
  out.summary.index = k;
  out.summary.seed = child_seed(config.master_seed, k);
  Rng rng(out.summary.seed);
  const auto weights = sample_weights(problem.n_obj, rng);
  const auto res = run_single_coa(problem, weights, config.coa, config.scalarizer, rng);

  out.summary.weights.assign(weights.values().begin(), weights.values().end());
  out.summary.best_cost = res.best.cost;
  out.summary.best_x = res.best.x;
  out.summary.best_f = res.best.eval.objectives;
  out.summary.best_feasible = res.best.eval.feasible();
  out.summary.iterations = res.iterations;
  out.summary.stop_reason = res.stop_reason;

  out.candidates.push_back({{res.best.x, res.best.eval.objectives}, res.best.eval.feasible()});
  for (const auto& h : res.population) {
    if (h.eval.feasible()) out.candidates.push_back({{h.x, h.eval.objectives}, true});
  }
  return out;
}

std::vector<std::size_t> checked_order(const RunOptions& options, std::size_t n) {
  std::vector<std::size_t> order = options.execution_order;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
  }
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  bool perm = sorted.size() == n;
  for (std::size_t i = 0; perm && i < n; ++i) perm = sorted[i] == i;
  if (!perm) throw std::invalid_argument("execution_order must be a permutation of 0..n_weight_samples-1");
  return order;
}

}  // namespace

RunReport run_coaw(const RunConfig& config, const RunOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  config.validate();
  const auto problem = get_builtin(config.problem_id, config.box_extent);
  const auto n = static_cast<std::size_t>(config.n_weight_samples);
  const auto order = checked_order(options, n);

  std::vector<SampleOutput> samples(n);
  const unsigned threads = std::clamp<unsigned>(options.threads, 1u, static_cast<unsigned>(n));
  if (threads == 1) {
    for (auto k : order) samples[k] = run_sample(problem, config, k);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            samples[order[i]] = run_sample(problem, config, order[i]);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  // Collect in sample-index order regardless of execution order.
  RunReport report;
  ParetoArchive archive;
  for (auto& s : samples) {
    for (auto& [p, feasible] : s.candidates) archive.insert(std::move(p.x), std::move(p.f), feasible);
    report.runs.push_back(std::move(s.summary));
  }
  report.archive = archive.sorted();
  report.oracle_front = grid_reference_front(problem, config.oracle);
  if (!report.archive.empty()) {
    report.metrics = front_metrics(objectives_of(report.archive), objectives_of(report.oracle_front));
  }
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (options.write) write_outputs(report, config);
  return report;
}

std::string metrics_json(const RunReport& report, const RunConfig& config) {
  nlohmann::ordered_json j;
  if (report.archive.empty()) {
    j["generational_distance"] = nullptr;
    j["extreme_error"] = nullptr;
    j["spread"] = nullptr;
  } else {
    j["generational_distance"] = report.metrics.generational_distance;
    j["extreme_error"] = report.metrics.extreme_error;
    j["spread"] = report.metrics.spread ? nlohmann::ordered_json(*report.metrics.spread) : nullptr;
  }
  j["runtime_seconds"] = config.record_runtime ? report.runtime_seconds : 0.0;
  j["n_front_points"] = report.archive.size();
  auto& runs = j["per_run"] = nlohmann::ordered_json::array();
  for (const auto& r : report.runs) {
    nlohmann::ordered_json e;
    e["index"] = r.index;
    e["seed"] = r.seed;
    e["weights"] = r.weights;
    e["best_cost"] = r.best_cost;
    e["best_x"] = r.best_x;
    e["best_f"] = r.best_f;
    e["best_feasible"] = r.best_feasible;
    e["iterations"] = r.iterations;
    e["stop_reason"] = std::string(to_string(r.stop_reason));
    runs.push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string gnuplot_script(const ProblemSpec& problem) {
  const auto f1 = std::to_string(problem.dim + 1);
  const auto f2 = std::to_string(problem.dim + 2);
  return "set datafile separator ','\n"
         "set title 'Pareto front (" + problem.id + ")'\n"
         "set xlabel 'f1'\n"
         "set ylabel 'f2'\n"
         "set key outside\n"
         "plot 'oracle_front.csv' every ::1 using " + f1 + ":" + f2 + " with lines lw 2 title 'grid oracle', \\\n"
         "     'front.csv' every ::1 using " + f1 + ":" + f2 + " with points pt 7 ps 0.8 title 'COAW archive'\n";
}

void write_outputs(const RunReport& report, const RunConfig& config) {
  const auto problem = get_builtin(config.problem_id, config.box_extent);
  std::vector<std::pair<std::string, std::string>> files = {
      {"front.csv", front_to_csv(report.archive, problem.dim, problem.n_obj)},
      {"oracle_front.csv", front_to_csv(report.oracle_front, problem.dim, problem.n_obj)},
      {"metrics.json", metrics_json(report, config)},
  };
  if (config.emit_plot_data) {
    files.emplace_back("front.gp", gnuplot_script(problem));
  }
  write_files_atomically(config.output_dir, files);
}

}  // namespace coaw
