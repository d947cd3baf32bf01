#include "coaw/problems.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace coaw {

namespace {

constexpr std::array<std::string_view, 3> kBuiltinIds = {"p1", "p2", "p3"};

std::string join_ids() {
  std::string out;
  for (auto id : kBuiltinIds) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

// min x1, min x2  s.t. (x1-2)^2 + (x2-2)^2 <= 4, x >= 0
ProblemSpec make_p1(double b) {
  ProblemSpec p;
  p.id = "p1";
  p.dim = 2;
  p.n_obj = 2;
  p.lower = {0.0, 0.0};
  p.upper = {b, b};
  p.objectives = {[](std::span<const double> x) { return x[0]; },
                  [](std::span<const double> x) { return x[1]; }};
  p.constraints = {[](std::span<const double> x) {
    const double a = x[0] - 2.0;
    const double c = x[1] - 2.0;
    return a * a + c * c - 4.0;
  }};
  return p;
}

// min 2x1 - x2, min -x2  s.t. (x1-1)^3 + x2 <= 0, x >= 0
ProblemSpec make_p2(double b) {
  ProblemSpec p;
  p.id = "p2";
  p.dim = 2;
  p.n_obj = 2;
  p.lower = {0.0, 0.0};
  p.upper = {b, b};
  p.objectives = {[](std::span<const double> x) { return 2.0 * x[0] - x[1]; },
                  [](std::span<const double> x) { return -x[1]; }};
  p.constraints = {[](std::span<const double> x) {
    const double a = x[0] - 1.0;
    return a * a * a + x[1];
  }};
  return p;
}

// min x1, min x2  s.t. x1^3 - 3x1 - x2 <= 0, x1 >= -1, x2 <= 2
ProblemSpec make_p3(double b) {
  ProblemSpec p;
  p.id = "p3";
  p.dim = 2;
  p.n_obj = 2;
  p.lower = {-1.0, -b};
  p.upper = {b, 2.0};
  p.objectives = {[](std::span<const double> x) { return x[0]; },
                  [](std::span<const double> x) { return x[1]; }};
  p.constraints = {[](std::span<const double> x) {
    return x[0] * x[0] * x[0] - 3.0 * x[0] - x[1];
  }};
  return p;
}

}  // namespace

void ProblemSpec::validate() const {
  if (dim < 1) throw std::invalid_argument("problem '" + id + "': dim must be >= 1");
  if (n_obj < 2) throw std::invalid_argument("problem '" + id + "': n_obj must be >= 2");
  if (lower.size() != dim || upper.size() != dim) {
    throw std::invalid_argument("problem '" + id + "': bounds must have length dim");
  }
  if (objectives.size() != n_obj) {
    throw std::invalid_argument("problem '" + id + "': expected n_obj objective evaluators");
  }
  for (std::size_t d = 0; d < dim; ++d) {
    if (!std::isfinite(lower[d]) || !std::isfinite(upper[d]) || !(lower[d] < upper[d])) {
      throw std::invalid_argument("problem '" + id + "': need finite lower < upper in every dimension");
    }
  }
}

std::span<const std::string_view> builtin_ids() noexcept { return kBuiltinIds; }

ProblemSpec get_builtin(std::string_view id, double box_extent) {
  if (!std::isfinite(box_extent) || box_extent <= 0.0) {
    throw std::invalid_argument("box extent must be finite and > 0");
  }
  if (id == "p1") return make_p1(box_extent);
  if (id == "p2") return make_p2(box_extent);
  if (id == "p3") return make_p3(box_extent);
  throw std::invalid_argument("unknown problem id '" + std::string(id) + "' (valid: " + join_ids() + ")");
}

EvalResult evaluate(const ProblemSpec& problem, std::span<const double> x) {
  if (x.size() != problem.dim) {
    throw std::invalid_argument("dimension mismatch: problem '" + problem.id + "' expects " +
                                std::to_string(problem.dim) + " variables, got " +
                                std::to_string(x.size()));
  }
  if (!std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); })) {
    throw std::invalid_argument("non-finite decision vector passed to evaluate");
  }
  EvalResult r;
  r.objectives.reserve(problem.objectives.size());
  for (const auto& f : problem.objectives) r.objectives.push_back(f(x));
  r.violations.reserve(problem.constraints.size());
  for (const auto& g : problem.constraints) {
    const double v = std::max(0.0, g(x));
    r.violations.push_back(v);
    r.total_violation += v;
  }
  return r;
}

void clip_to_box(const ProblemSpec& problem, std::span<double> x) noexcept {
  for (std::size_t d = 0; d < x.size(); ++d) x[d] = std::clamp(x[d], problem.lower[d], problem.upper[d]);
}

bool inside_box(const ProblemSpec& problem, std::span<const double> x) noexcept {
  for (std::size_t d = 0; d < x.size(); ++d) {
    if (!(x[d] >= problem.lower[d] && x[d] <= problem.upper[d])) return false;
  }
  return x.size() == problem.dim;
}

}  // namespace coaw
