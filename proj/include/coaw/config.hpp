#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "coaw/coa_engine.hpp"
#include "coaw/oracle.hpp"
#include "coaw/problems.hpp"
#include "coaw/scalarization.hpp"

namespace coaw {

/// Raised for malformed or invalid run configurations.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything needed to reproduce one experiment.
struct RunConfig {
  std::string problem_id = "p1";
  double box_extent = kDefaultBoxExtent;
  CoaParams coa;
  ScalarizerConfig scalarizer;
  int n_weight_samples = 50;
  std::uint64_t master_seed = 42;
  OracleConfig oracle;
  std::filesystem::path output_dir = "coaw_out";
  bool emit_plot_data = false;
  // When false, metrics.json reports runtime_seconds as 0 so that repeated
  // runs are byte-identical.
  bool record_runtime = true;

  /// Throws ConfigError naming the violated invariant.
  void validate() const;
};

/// Parses the flat `key = value` format. Dotted keys address nested fields
/// (`coa.max_iterations = 50`). `#` starts a comment. Unknown or repeated
/// keys are errors. The result is validated.
RunConfig parse_config(std::string_view text);

RunConfig load_config(const std::filesystem::path& path);

/// Renders every key in canonical order; parse_config(format_config(c)) == c.
std::string format_config(const RunConfig& cfg);

}  // namespace coaw
