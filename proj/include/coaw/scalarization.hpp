#pragma once

#include <span>
#include <vector>

#include "coaw/problems.hpp"
#include "coaw/rng.hpp"

namespace coaw {

/// SAW weights: nonnegative, summing to one.
class WeightVector {
 public:
  static constexpr double kSumTolerance = 1e-12;

  /// Validates the simplex invariants; throws std::invalid_argument.
  explicit WeightVector(Vector w);

  /// Renormalizes any nonnegative vector with a positive sum.
  static WeightVector normalized(std::span<const double> raw);

  std::span<const double> values() const noexcept { return w_; }
  std::size_t size() const noexcept { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }

 private:
  Vector w_;
};

struct ScalarizerConfig {
  double penalty_coefficient = 1e6;
  bool normalize = false;

  void validate() const;
};

/// Uniform draw on the (n_obj-1)-simplex.
WeightVector sample_weights(std::size_t n_obj, Rng& rng);

/// sum_i w_i * f_i. Lower is better.
double saw_scalarize(std::span<const double> objectives, const WeightVector& weights);

/// SAW composite plus penalty_coefficient * total_violation.
double penalized_cost(const EvalResult& eval, const WeightVector& weights, const ScalarizerConfig& cfg);

/// Min-max rescales each column of `rows` to [0,1]; a constant column maps to zeros.
std::vector<Vector> normalize_generation(std::span<const Vector> rows);

}  // namespace coaw
