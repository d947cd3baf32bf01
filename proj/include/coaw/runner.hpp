#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coaw/coa_engine.hpp"
#include "coaw/config.hpp"
#include "coaw/pareto.hpp"

namespace coaw {

/// Outcome of one weight sample.
struct RunSummary {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  Vector weights;
  double best_cost = 0.0;
  Vector best_x;
  Vector best_f;
  bool best_feasible = false;
  int iterations = 0;
  StopReason stop_reason = StopReason::MaxIterations;
};

struct RunReport {
  std::vector<FrontPoint> archive;  // sorted by f1, then f2
  std::vector<FrontPoint> oracle_front;
  FrontMetrics metrics;
  std::vector<RunSummary> runs;  // indexed by weight sample
  double runtime_seconds = 0.0;
};

struct RunOptions {
  /// Order in which weight samples execute; empty means 0..n-1. Must be a
  /// permutation. The report does not depend on it.
  std::vector<std::size_t> execution_order;
  unsigned threads = 1;
  bool write = true;
};

/// Full procedure: one COA run per sampled weight vector, archive of every
/// run's best habitat and feasible final population, oracle comparison.
RunReport run_coaw(const RunConfig& config, const RunOptions& options = {});

/// metrics.json contents.
std::string metrics_json(const RunReport& report, const RunConfig& config);

/// gnuplot script drawing front.csv over oracle_front.csv.
std::string gnuplot_script(const ProblemSpec& problem);

/// Writes front.csv, oracle_front.csv, metrics.json and, if requested, front.gp.
void write_outputs(const RunReport& report, const RunConfig& config);

}  // namespace coaw
