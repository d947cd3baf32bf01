#include "coaw/coa_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace coaw {

namespace {

constexpr int kMaxLloydIterations = 100;

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) {
    const double t = a[d] - b[d];
    s += t * t;
  }
  return s;
}

bool within_box_of(std::span<const double> a, std::span<const double> b, std::span<const double> eps) {
  for (std::size_t d = 0; d < a.size(); ++d) {
    if (std::abs(a[d] - b[d]) > eps[d]) return false;
  }
  return true;
}

// Costs used for selection. Identical to habitat.cost unless per-generation
// normalization is enabled.
std::vector<double> selection_costs(std::span<const Habitat> pop, const WeightVector& weights,
                                    const ScalarizerConfig& scal) {
  std::vector<double> costs(pop.size());
  if (!scal.normalize) {
    for (std::size_t i = 0; i < pop.size(); ++i) costs[i] = pop[i].cost;
    return costs;
  }
  std::vector<Vector> rows;
  rows.reserve(pop.size());
  for (const auto& h : pop) rows.push_back(h.eval.objectives);
  const auto scaled = normalize_generation(rows);
  for (std::size_t i = 0; i < pop.size(); ++i) {
    costs[i] = saw_scalarize(scaled[i], weights) + scal.penalty_coefficient * pop[i].eval.total_violation;
  }
  return costs;
}

double variance(std::span<const Habitat> pop) {
  if (pop.empty()) return 0.0;
  double mean = 0.0;
  for (const auto& h : pop) mean += h.cost;
  mean /= static_cast<double>(pop.size());
  double v = 0.0;
  for (const auto& h : pop) v += (h.cost - mean) * (h.cost - mean);
  return v / static_cast<double>(pop.size());
}

}  // namespace

void CoaParams::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument("invalid COA parameters: " + what); };
  if (initial_population < 1) fail("coa.initial_population must be >= 1");
  if (min_eggs < 1) fail("coa.min_eggs must be >= 1");
  if (min_eggs > max_eggs) fail("coa.min_eggs must be <= coa.max_eggs");
  if (max_iterations < 1) fail("coa.max_iterations must be >= 1");
  if (n_clusters < 1) fail("coa.n_clusters must be >= 1");
  if (max_cuckoos < 1) fail("coa.max_cuckoos must be >= 1");
  if (initial_population > max_cuckoos) fail("coa.initial_population must be <= coa.max_cuckoos");
  if (!(lambda_max > 0.0) || !std::isfinite(lambda_max)) fail("coa.lambda_max must be finite and > 0");
  if (!(egg_laying_alpha > 0.0) || !std::isfinite(egg_laying_alpha)) {
    fail("coa.egg_laying_alpha must be finite and > 0");
  }
  if (std::isnan(pop_variance_stop)) fail("coa.pop_variance_stop must not be NaN");
  if (accuracy_stop && std::isnan(*accuracy_stop)) fail("coa.accuracy_stop must not be NaN");
  if (!(detection_epsilon_frac >= 0.0) || !std::isfinite(detection_epsilon_frac)) {
    fail("coa.detection_epsilon_frac must be finite and >= 0");
  }
}

std::string_view to_string(StopReason r) noexcept {
  switch (r) {
    case StopReason::MaxIterations: return "max_iterations";
    case StopReason::PopulationVariance: return "population_variance";
    case StopReason::Accuracy: return "accuracy";
  }
  return "unknown";
}

Habitat make_habitat(const ProblemSpec& problem, Vector x, const WeightVector& weights,
                     const ScalarizerConfig& scal) {
  Habitat h;
  h.eval = evaluate(problem, x);
  h.x = std::move(x);
  h.cost = penalized_cost(h.eval, weights, scal);
  return h;
}

std::vector<Habitat> init_population(const ProblemSpec& problem, const CoaParams& params,
                                     const WeightVector& weights, const ScalarizerConfig& scal,
                                     Rng& rng) {
  std::vector<Habitat> pop;
  pop.reserve(static_cast<std::size_t>(params.initial_population));
  for (int i = 0; i < params.initial_population; ++i) {
    Vector x(problem.dim);
    for (std::size_t d = 0; d < problem.dim; ++d) {
      x[d] = std::uniform_real_distribution<double>(problem.lower[d], problem.upper[d])(rng);
    }
    pop.push_back(make_habitat(problem, std::move(x), weights, scal));
  }
  return pop;
}

void assign_eggs(std::span<Habitat> population, const CoaParams& params, Rng& rng) {
  std::uniform_int_distribution<int> eggs(params.min_eggs, params.max_eggs);
  for (auto& h : population) h.n_eggs = eggs(rng);
}

Vector egg_laying_radius(int habitat_eggs, int total_eggs, const CoaParams& params,
                         const ProblemSpec& problem) {
  if (total_eggs <= 0) throw std::invalid_argument("egg_laying_radius: total_eggs must be > 0");
  if (habitat_eggs < 0 || habitat_eggs > total_eggs) {
    throw std::invalid_argument("egg_laying_radius: habitat_eggs must lie in [0, total_eggs]");
  }
  const double share = static_cast<double>(habitat_eggs) / static_cast<double>(total_eggs);
  Vector r(problem.dim);
  for (std::size_t d = 0; d < problem.dim; ++d) {
    r[d] = params.egg_laying_alpha * share * (problem.upper[d] - problem.lower[d]);
  }
  return r;
}

std::vector<Vector> lay_eggs(const Habitat& habitat, std::span<const double> radius, Rng& rng,
                             const ProblemSpec& problem) {
  if (radius.size() != habitat.x.size()) throw std::invalid_argument("lay_eggs: radius dimension mismatch");
  std::vector<Vector> eggs;
  eggs.reserve(static_cast<std::size_t>(std::max(habitat.n_eggs, 0)));
  for (int e = 0; e < habitat.n_eggs; ++e) {
    Vector egg = habitat.x;
    for (std::size_t d = 0; d < egg.size(); ++d) {
      if (radius[d] < 0.0) throw std::invalid_argument("lay_eggs: negative radius");
      if (radius[d] > 0.0) egg[d] += std::uniform_real_distribution<double>(-radius[d], radius[d])(rng);
    }
    clip_to_box(problem, egg);
    eggs.push_back(std::move(egg));
  }
  return eggs;
}

std::vector<Vector> detect_and_destroy(std::span<const Vector> eggs, std::span<const Habitat> existing,
                                       const CoaParams& params, const ProblemSpec& problem) {
  Vector eps(problem.dim);
  for (std::size_t d = 0; d < problem.dim; ++d) {
    eps[d] = params.detection_epsilon_frac * (problem.upper[d] - problem.lower[d]);
  }
  std::vector<Vector> survivors;
  for (const auto& egg : eggs) {
    const bool detected =
        std::any_of(existing.begin(), existing.end(),
                    [&](const Habitat& h) { return within_box_of(egg, h.x, eps); }) ||
        std::any_of(survivors.begin(), survivors.end(),
                    [&](const Vector& s) { return within_box_of(egg, s, eps); });
    if (!detected) survivors.push_back(egg);
  }
  return survivors;
}

std::vector<std::size_t> lowest_cost_indices(std::span<const double> costs, std::size_t keep) {
  std::vector<std::size_t> idx(costs.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (keep >= idx.size()) return idx;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return costs[a] < costs[b]; });
  idx.resize(keep);
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::vector<Habitat> enforce_capacity(std::vector<Habitat> population, const CoaParams& params) {
  const auto cap = static_cast<std::size_t>(params.max_cuckoos);
  if (population.size() <= cap) return population;
  std::vector<double> costs;
  costs.reserve(population.size());
  for (const auto& h : population) costs.push_back(h.cost);
  std::vector<Habitat> kept;
  kept.reserve(cap);
  for (auto i : lowest_cost_indices(costs, cap)) kept.push_back(std::move(population[i]));
  return kept;
}

ClusterResult kmeans_cluster(std::span<const Habitat> population, std::size_t k, Rng& rng,
                             std::span<const double> costs) {
  const std::size_t n = population.size();
  if (k < 1) throw std::invalid_argument("kmeans_cluster: k must be >= 1");
  if (n < k) {
    throw std::invalid_argument("kmeans_cluster: population of " + std::to_string(n) +
                                " is smaller than k = " + std::to_string(k));
  }
  if (!costs.empty() && costs.size() != n) throw std::invalid_argument("kmeans_cluster: cost count mismatch");
  auto cost_of = [&](std::size_t i) { return costs.empty() ? population[i].cost : costs[i]; };
  const std::size_t dim = population.front().x.size();

  // k distinct members by partial Fisher-Yates.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = std::uniform_int_distribution<std::size_t>(i, n - 1)(rng);
    std::swap(order[i], order[j]);
  }
  ClusterResult out;
  out.centroids.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.centroids.push_back(population[order[i]].x);

  constexpr auto kUnassigned = std::numeric_limits<std::size_t>::max();
  out.assignment.assign(n, kUnassigned);
  for (int it = 0; it < kMaxLloydIterations; ++it) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t best = 0;
      double best_d = squared_distance(population[i].x, out.centroids[0]);
      for (std::size_t c = 1; c < k; ++c) {
        const double dc = squared_distance(population[i].x, out.centroids[c]);
        if (dc < best_d) {
          best_d = dc;
          best = c;
        }
      }
      if (out.assignment[i] != best) {
        out.assignment[i] = best;
        changed = true;
      }
    }
    if (!changed) break;

    std::vector<Vector> sums(k, Vector(dim, 0.0));
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      auto& s = sums[out.assignment[i]];
      for (std::size_t d = 0; d < dim; ++d) s[d] += population[i].x[d];
      ++counts[out.assignment[i]];
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] > 0) {
        for (std::size_t d = 0; d < dim; ++d) sums[c][d] /= static_cast<double>(counts[c]);
        out.centroids[c] = std::move(sums[c]);
        continue;
      }
      // Empty cluster: move its centroid to the member farthest from it.
      std::size_t far = 0;
      double far_d = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double di = squared_distance(population[i].x, out.centroids[c]);
        if (di > far_d) {
          far_d = di;
          far = i;
        }
      }
      out.centroids[c] = population[far].x;
    }
  }

  std::vector<double> cost_sum(k, 0.0);
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    cost_sum[out.assignment[i]] += cost_of(i);
    ++counts[out.assignment[i]];
  }
  bool have_best = false;
  double best_mean = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    if (counts[c] == 0) continue;
    const double mean = cost_sum[c] / static_cast<double>(counts[c]);
    if (!have_best || mean < best_mean) {
      best_mean = mean;
      out.best_cluster = c;
      have_best = true;
    }
  }
  bool have_goal = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (out.assignment[i] != out.best_cluster) continue;
    if (!have_goal || cost_of(i) < cost_of(out.goal_index)) {
      out.goal_index = i;
      have_goal = true;
    }
  }
  out.goal = population[out.goal_index].x;
  return out;
}

Vector migrate_with_step(std::span<const double> x, std::span<const double> goal, double lambda,
                         const ProblemSpec& problem) {
  if (x.size() != goal.size()) throw std::invalid_argument("migrate: goal dimension mismatch");
  Vector out(x.begin(), x.end());
  for (std::size_t d = 0; d < out.size(); ++d) out[d] += lambda * (goal[d] - x[d]);
  clip_to_box(problem, out);
  return out;
}

Vector migrate(const Habitat& habitat, std::span<const double> goal, const CoaParams& params, Rng& rng,
               const ProblemSpec& problem) {
  const double lambda = std::uniform_real_distribution<double>(0.0, params.lambda_max)(rng);
  return migrate_with_step(habitat.x, goal, lambda, problem);
}

CoaResult run_single_coa(const ProblemSpec& problem, const WeightVector& weights, const CoaParams& params,
                         const ScalarizerConfig& scal, Rng& rng, const EngineObserver& observer) {
  problem.validate();
  params.validate();
  scal.validate();
  if (weights.size() != problem.n_obj) throw std::invalid_argument("run_single_coa: weight count != n_obj");

  auto notify = [&](EngineStep step, int iter, std::span<const Habitat> pop) {
    if (observer) observer(step, iter, pop);
  };

  CoaResult result;
  auto pop = init_population(problem, params, weights, scal, rng);
  notify(EngineStep::Init, 0, pop);

  result.best = pop.front();
  auto track_best = [&](std::span<const Habitat> hs) {
    for (const auto& h : hs) {
      if (h.cost < result.best.cost) result.best = h;
    }
  };
  track_best(pop);

  for (int iter = 1; iter <= params.max_iterations; ++iter) {
    assign_eggs(pop, params, rng);
    int total_eggs = 0;
    for (const auto& h : pop) total_eggs += h.n_eggs;

    std::vector<Vector> eggs;
    for (const auto& h : pop) {
      const auto radius = egg_laying_radius(h.n_eggs, total_eggs, params, problem);
      auto laid = lay_eggs(h, radius, rng, problem);
      std::move(laid.begin(), laid.end(), std::back_inserter(eggs));
    }
    const std::size_t n_old = pop.size();
    for (auto& egg : detect_and_destroy(eggs, pop, params, problem)) {
      pop.push_back(make_habitat(problem, std::move(egg), weights, scal));
    }
    track_best(std::span<const Habitat>(pop).subspan(n_old));
    notify(EngineStep::Merge, iter, pop);

    if (scal.normalize) {
      const auto costs = selection_costs(pop, weights, scal);
      std::vector<Habitat> kept;
      for (auto i : lowest_cost_indices(costs, static_cast<std::size_t>(params.max_cuckoos))) {
        kept.push_back(std::move(pop[i]));
      }
      pop = std::move(kept);
    } else {
      pop = enforce_capacity(std::move(pop), params);
    }
    notify(EngineStep::Capacity, iter, pop);

    const std::size_t k = std::min(static_cast<std::size_t>(params.n_clusters), pop.size());
    const auto sel = selection_costs(pop, weights, scal);
    const auto clusters = kmeans_cluster(pop, k, rng, sel);
    for (std::size_t i = 0; i < pop.size(); ++i) {
      if (i == clusters.goal_index) continue;
      pop[i] = make_habitat(problem, migrate(pop[i], clusters.goal, params, rng, problem), weights, scal);
    }
    track_best(pop);
    notify(EngineStep::Migrate, iter, pop);

    result.trace.push_back(result.best.cost);
    result.iterations = iter;
    if (variance(pop) < params.pop_variance_stop) {
      result.stop_reason = StopReason::PopulationVariance;
      break;
    }
    if (params.accuracy_stop && result.best.cost <= *params.accuracy_stop) {
      result.stop_reason = StopReason::Accuracy;
      break;
    }
  }
  result.population = std::move(pop);
  return result;
}

}  // namespace coaw
