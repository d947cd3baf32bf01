#include "coaw/scalarization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace coaw {

WeightVector::WeightVector(Vector w) : w_(std::move(w)) {
  if (w_.size() < 2) throw std::invalid_argument("weight vector needs at least 2 components");
  for (double v : w_) {
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("weight components must lie in [0,1]");
  }
  const double sum = std::accumulate(w_.begin(), w_.end(), 0.0);
  if (std::abs(sum - 1.0) > kSumTolerance) throw std::invalid_argument("weights must sum to 1");
}

WeightVector WeightVector::normalized(std::span<const double> raw) {
  double sum = 0.0;
  for (double v : raw) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("raw weights must be finite and >= 0");
    sum += v;
  }
  if (!(sum > 0.0)) throw std::invalid_argument("raw weights must have a positive sum");
  Vector w(raw.begin(), raw.end());
  for (double& v : w) v /= sum;
  return WeightVector(std::move(w));
}

void ScalarizerConfig::validate() const {
  if (!(penalty_coefficient > 0.0) || !std::isfinite(penalty_coefficient)) {
    throw std::invalid_argument("scalarizer.penalty_coefficient must be finite and > 0");
  }
}

WeightVector sample_weights(std::size_t n_obj, Rng& rng) {
  if (n_obj < 2) throw std::invalid_argument("sample_weights: n_obj must be >= 2");
  // Normalized i.i.d. Exp(1) draws are Dirichlet(1,...,1).
  std::exponential_distribution<double> exp1(1.0);
  Vector e(n_obj);
  double sum = 0.0;
  do {
    sum = 0.0;
    for (double& v : e) {
      v = exp1(rng);
      sum += v;
    }
  } while (!(sum > 0.0));
  return WeightVector::normalized(e);
}

double saw_scalarize(std::span<const double> objectives, const WeightVector& weights) {
  if (objectives.size() != weights.size()) {
    throw std::invalid_argument("saw_scalarize: objective/weight length mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < objectives.size(); ++i) s += weights[i] * objectives[i];
  return s;
}

double penalized_cost(const EvalResult& eval, const WeightVector& weights, const ScalarizerConfig& cfg) {
  if (eval.total_violation < 0.0) throw std::invalid_argument("penalized_cost: negative violation");
  const double base = saw_scalarize(eval.objectives, weights);
  if (eval.total_violation == 0.0) return base;
  return base + cfg.penalty_coefficient * eval.total_violation;
}

std::vector<Vector> normalize_generation(std::span<const Vector> rows) {
  std::vector<Vector> out(rows.begin(), rows.end());
  if (rows.empty()) return out;
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("normalize_generation: ragged rows");
  }
  for (std::size_t c = 0; c < cols; ++c) {
    double lo = rows[0][c];
    double hi = rows[0][c];
    for (const auto& r : rows) {
      lo = std::min(lo, r[c]);
      hi = std::max(hi, r[c]);
    }
    const double span = hi - lo;
    for (auto& r : out) r[c] = span > 0.0 ? (r[c] - lo) / span : 0.0;
  }
  return out;
}

}  // namespace coaw
