#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coaw {

using Vector = std::vector<double>;
using Evaluator = std::function<double(std::span<const double>)>;

/// Default extent used for decision directions the built-in problems leave open.
inline constexpr double kDefaultBoxExtent = 4.0;

/// A constrained multi-objective problem in canonical form.
///
/// Objectives are minimized. Every constraint evaluator returns g(x) - b so
/// that a point is feasible when all constraint values are <= 0. Simple sign
/// bounds on variables live in `lower`/`upper`, not in `constraints`.
struct ProblemSpec {
  std::string id;
  std::size_t dim = 0;
  std::size_t n_obj = 0;
  Vector lower;
  Vector upper;
  std::vector<Evaluator> objectives;
  std::vector<Evaluator> constraints;

  /// Throws std::invalid_argument if the problem is malformed.
  void validate() const;
};

struct EvalResult {
  Vector objectives;
  Vector violations;  // max(0, g_j(x)) per constraint
  double total_violation = 0.0;

  bool feasible() const noexcept { return total_violation == 0.0; }
};

/// Ids accepted by get_builtin.
std::span<const std::string_view> builtin_ids() noexcept;

/// Returns one of the built-in benchmark problems ("p1", "p2", "p3").
ProblemSpec get_builtin(std::string_view id, double box_extent = kDefaultBoxExtent);

/// Evaluates objectives and constraint violations at x. Does not clip x.
EvalResult evaluate(const ProblemSpec& problem, std::span<const double> x);

/// Clamps x into the problem box in place.
void clip_to_box(const ProblemSpec& problem, std::span<double> x) noexcept;

bool inside_box(const ProblemSpec& problem, std::span<const double> x) noexcept;

}  // namespace coaw
