#pragma once

#include <vector>

#include "coaw/pareto.hpp"
#include "coaw/problems.hpp"

namespace coaw {

struct OracleConfig {
  int resolution = 801;  // grid points per dimension

  void validate() const;
};

/// Constraint values up to this are treated as satisfied by the grid oracle.
inline constexpr double kOracleFeasibilityTolerance = 1e-9;

/// Largest dimension the exhaustive grid accepts.
inline constexpr std::size_t kOracleMaxDim = 3;

/// Nondominated feasible points of a full grid over the problem box, in grid order.
std::vector<FrontPoint> grid_reference_front(const ProblemSpec& problem, const OracleConfig& cfg);

/// (t, t^3 - 3t) for t evenly spaced on [-1, 1].
std::vector<Vector> analytic_front_p3(int n_points);

}  // namespace coaw
