#include "coaw/oracle.hpp"

#include <stdexcept>
#include <string>

namespace coaw {

void OracleConfig::validate() const {
  if (resolution < 2) throw std::invalid_argument("oracle.resolution must be >= 2");
}

std::vector<FrontPoint> grid_reference_front(const ProblemSpec& problem, const OracleConfig& cfg) {
  problem.validate();
  cfg.validate();
  if (problem.dim > kOracleMaxDim) {
    throw std::invalid_argument("grid oracle supports dim <= " + std::to_string(kOracleMaxDim) + ", got " +
                                std::to_string(problem.dim));
  }
  const auto n = static_cast<std::size_t>(cfg.resolution);
  const double steps = static_cast<double>(n - 1);
  auto coord = [&](std::size_t d, std::size_t i) {
    if (i == n - 1) return problem.upper[d];
    return problem.lower[d] + (problem.upper[d] - problem.lower[d]) * static_cast<double>(i) / steps;
  };

  std::vector<FrontPoint> feasible;
  std::vector<std::size_t> idx(problem.dim, 0);
  Vector x(problem.dim);
  for (;;) {
    for (std::size_t d = 0; d < problem.dim; ++d) x[d] = coord(d, idx[d]);
    const auto r = evaluate(problem, x);
    bool ok = true;
    for (double v : r.violations) ok = ok && v <= kOracleFeasibilityTolerance;
    if (ok) feasible.push_back({x, r.objectives});

    std::size_t d = 0;
    while (d < problem.dim && ++idx[d] == n) idx[d++] = 0;
    if (d == problem.dim) break;
  }

  const auto keep = pareto_filter(objectives_of(feasible));
  std::vector<FrontPoint> front;
  front.reserve(keep.size());
  for (auto i : keep) front.push_back(std::move(feasible[i]));
  return front;
}

std::vector<Vector> analytic_front_p3(int n_points) {
  if (n_points < 2) throw std::invalid_argument("analytic_front_p3: n_points must be >= 2");
  std::vector<Vector> out;
  out.reserve(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    const double t = i == n_points - 1 ? 1.0 : -1.0 + 2.0 * static_cast<double>(i) / (n_points - 1);
    out.push_back({t, t * t * t - 3.0 * t});
  }
  return out;
}

}  // namespace coaw
