#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "coaw/problems.hpp"
#include "coaw/rng.hpp"
#include "coaw/scalarization.hpp"

namespace coaw {

/// One cuckoo: a position in decision space and its cached evaluation.
struct Habitat {
  Vector x;
  EvalResult eval;
  double cost = 0.0;  // penalized SAW cost under the run's weights
  int n_eggs = 0;
};

/// COA parameters.
struct CoaParams {
  int initial_population = 5;
  int min_eggs = 2;
  int max_eggs = 4;
  int max_iterations = 50;
  int n_clusters = 1;
  double lambda_max = 5.0;
  double egg_laying_alpha = 5.0;
  int max_cuckoos = 10;
  double pop_variance_stop = 1e-13;  // <= 0 disables the variance stop
  std::optional<double> accuracy_stop;
  double detection_epsilon_frac = 1e-6;

  /// Throws std::invalid_argument naming the first violated invariant.
  void validate() const;
};

enum class StopReason { MaxIterations, PopulationVariance, Accuracy };

std::string_view to_string(StopReason r) noexcept;

/// Engine steps reported to an observer, in execution order within an iteration.
enum class EngineStep { Init, Merge, Capacity, Migrate };

using EngineObserver = std::function<void(EngineStep, int iteration, std::span<const Habitat>)>;

struct CoaResult {
  Habitat best;
  std::vector<Habitat> population;
  std::vector<double> trace;  // best-so-far cost after each iteration
  int iterations = 0;
  StopReason stop_reason = StopReason::MaxIterations;
};

struct ClusterResult {
  std::vector<std::size_t> assignment;
  std::vector<Vector> centroids;
  std::size_t best_cluster = 0;
  std::size_t goal_index = 0;  // index into the population
  Vector goal;
};

/// Costs an evaluated point under fixed weights and penalty settings.
Habitat make_habitat(const ProblemSpec& problem, Vector x, const WeightVector& weights,
                     const ScalarizerConfig& scal);

std::vector<Habitat> init_population(const ProblemSpec& problem, const CoaParams& params,
                                     const WeightVector& weights, const ScalarizerConfig& scal,
                                     Rng& rng);

void assign_eggs(std::span<Habitat> population, const CoaParams& params, Rng& rng);

/// Per-dimension radius alpha * (eggs / total_eggs) * (upper - lower).
Vector egg_laying_radius(int habitat_eggs, int total_eggs, const CoaParams& params,
                         const ProblemSpec& problem);

/// habitat.n_eggs points uniform in the box of half-widths `radius` around
/// habitat.x, clipped to the problem bounds.
std::vector<Vector> lay_eggs(const Habitat& habitat, std::span<const double> radius, Rng& rng,
                             const ProblemSpec& problem);

/// Drops eggs that coincide (per-dimension within detection_epsilon_frac of
/// the range) with an existing habitat or an earlier surviving egg.
std::vector<Vector> detect_and_destroy(std::span<const Vector> eggs, std::span<const Habitat> existing,
                                       const CoaParams& params, const ProblemSpec& problem);

/// Indices of the `keep` lowest costs, ties to the lower index, in ascending index order.
std::vector<std::size_t> lowest_cost_indices(std::span<const double> costs, std::size_t keep);

/// Keeps the max_cuckoos lowest-cost habitats, preserving their relative order.
std::vector<Habitat> enforce_capacity(std::vector<Habitat> population, const CoaParams& params);

/// Lloyd's k-means on habitat positions. The best cluster has the lowest mean
/// cost; the goal is its lowest-cost member. `costs` overrides habitat.cost
/// when non-empty.
ClusterResult kmeans_cluster(std::span<const Habitat> population, std::size_t k, Rng& rng,
                             std::span<const double> costs = {});

/// x + lambda * (goal - x) with lambda ~ U[0, lambda_max], clipped.
Vector migrate(const Habitat& habitat, std::span<const double> goal, const CoaParams& params, Rng& rng,
               const ProblemSpec& problem);

/// Same as above with a fixed step factor.
Vector migrate_with_step(std::span<const double> x, std::span<const double> goal, double lambda,
                         const ProblemSpec& problem);

/// One full COA run for a fixed weight vector.
CoaResult run_single_coa(const ProblemSpec& problem, const WeightVector& weights, const CoaParams& params,
                         const ScalarizerConfig& scal, Rng& rng, const EngineObserver& observer = {});

}  // namespace coaw
