#pragma once

#include <optional>
#include <span>
#include <vector>

#include "coaw/problems.hpp"

namespace coaw {

/// Decision vector together with its objective vector (minimization).
struct FrontPoint {
  Vector x;
  Vector f;
};

/// True iff a is no worse than b everywhere and strictly better somewhere.
bool dominates(std::span<const double> a, std::span<const double> b);

/// Ascending indices of the nondominated points. Of several identical
/// points only the lowest index is kept.
std::vector<std::size_t> pareto_filter(std::span<const Vector> points);

/// Mutually nondominated set of feasible points without duplicate objective vectors.
class ParetoArchive {
 public:
  /// Returns true if the candidate was inserted. Infeasible, dominated, and
  /// duplicate candidates are rejected; entries the candidate dominates are removed.
  bool insert(Vector x, Vector f, bool feasible);
  bool insert(const FrontPoint& p, bool feasible) { return insert(p.x, p.f, feasible); }

  std::span<const FrontPoint> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Entries ordered by f1 ascending, ties by the following objectives.
  std::vector<FrontPoint> sorted() const;

  /// Checks mutual nondominance and absence of duplicates.
  bool invariants_hold() const;

 private:
  std::vector<FrontPoint> entries_;
};

struct FrontMetrics {
  double generational_distance = 0.0;
  double extreme_error = 0.0;
  std::optional<double> spread;  // only for two objectives
};

/// Objective rows of `points`.
std::vector<Vector> objectives_of(std::span<const FrontPoint> points);

/// Point minimizing objective i, ties broken lexicographically on the full vector.
Vector per_objective_best(std::span<const Vector> front, std::size_t i);

double generational_distance(std::span<const Vector> approx, std::span<const Vector> reference);

/// Std-dev of consecutive gaps along the f1-sorted front over the mean gap.
double spread_2d(std::span<const Vector> front);

FrontMetrics front_metrics(std::span<const Vector> approx, std::span<const Vector> reference);

}  // namespace coaw
