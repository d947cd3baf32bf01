#include "coaw/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace coaw {

namespace {

bool lex_less(std::span<const double> a, std::span<const double> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool same(std::span<const double> a, std::span<const double> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

double distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) s += (a[d] - b[d]) * (a[d] - b[d]);
  return std::sqrt(s);
}

}  // namespace

bool dominates(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dominates: objective vectors differ in length");
  bool strictly = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strictly = true;
  }
  return strictly;
}

std::vector<std::size_t> pareto_filter(std::span<const Vector> points) {
  for (const auto& p : points) {
    if (p.size() != points.front().size()) throw std::invalid_argument("pareto_filter: ragged points");
  }
  // Any dominator of p sorts lexicographically before p, so a single sweep
  // against the current front suffices.
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lex_less(points[a], points[b]); });
  std::vector<std::size_t> front;
  if (!points.empty() && points.front().size() == 2) {
    // Two objectives: a point survives iff its f2 beats every earlier survivor.
    for (auto i : order) {
      if (front.empty() || points[i][1] < points[front.back()][1]) front.push_back(i);
    }
    std::sort(front.begin(), front.end());
    return front;
  }
  for (auto i : order) {
    const bool beaten = std::any_of(front.begin(), front.end(), [&](std::size_t j) {
      return same(points[j], points[i]) || dominates(points[j], points[i]);
    });
    if (!beaten) front.push_back(i);
  }
  std::sort(front.begin(), front.end());
  return front;
}

bool ParetoArchive::insert(Vector x, Vector f, bool feasible) {
  if (!feasible) return false;
  if (!std::all_of(f.begin(), f.end(), [](double v) { return std::isfinite(v); })) {
    throw std::invalid_argument("archive_insert: objectives must be finite");
  }
  for (const auto& e : entries_) {
    if (e.f.size() != f.size()) throw std::invalid_argument("archive_insert: objective count mismatch");
    if (same(e.f, f) || dominates(e.f, f)) return false;
  }
  std::erase_if(entries_, [&](const FrontPoint& e) { return dominates(f, e.f); });
  entries_.push_back({std::move(x), std::move(f)});
  return true;
}

std::vector<FrontPoint> ParetoArchive::sorted() const {
  std::vector<FrontPoint> out = entries_;
  std::sort(out.begin(), out.end(), [](const FrontPoint& a, const FrontPoint& b) { return lex_less(a.f, b.f); });
  return out;
}

bool ParetoArchive::invariants_hold() const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = 0; j < entries_.size(); ++j) {
      if (i == j) continue;
      if (same(entries_[i].f, entries_[j].f) || dominates(entries_[i].f, entries_[j].f)) return false;
    }
  }
  return true;
}

std::vector<Vector> objectives_of(std::span<const FrontPoint> points) {
  std::vector<Vector> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.f);
  return out;
}

Vector per_objective_best(std::span<const Vector> front, std::size_t i) {
  if (front.empty()) throw std::invalid_argument("per_objective_best: empty front");
  const Vector* best = &front.front();
  for (const auto& p : front) {
    if (p[i] < (*best)[i] || (p[i] == (*best)[i] && lex_less(p, *best))) best = &p;
  }
  return *best;
}

double generational_distance(std::span<const Vector> approx, std::span<const Vector> reference) {
  if (approx.empty() || reference.empty()) throw std::invalid_argument("generational_distance: empty input");
  double total = 0.0;
  for (const auto& a : approx) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& r : reference) nearest = std::min(nearest, distance(a, r));
    total += nearest;
  }
  return total / static_cast<double>(approx.size());
}

double spread_2d(std::span<const Vector> front) {
  if (front.size() < 3) return 0.0;
  std::vector<Vector> pts(front.begin(), front.end());
  std::sort(pts.begin(), pts.end(), [](const Vector& a, const Vector& b) { return lex_less(a, b); });
  std::vector<double> gaps;
  gaps.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) gaps.push_back(distance(pts[i - 1], pts[i]));
  const double mean = std::accumulate(gaps.begin(), gaps.end(), 0.0) / static_cast<double>(gaps.size());
  if (mean == 0.0) return 0.0;
  double var = 0.0;
  for (double g : gaps) var += (g - mean) * (g - mean);
  var /= static_cast<double>(gaps.size());
  return std::sqrt(var) / mean;
}

FrontMetrics front_metrics(std::span<const Vector> approx, std::span<const Vector> reference) {
  if (approx.empty() || reference.empty()) throw std::invalid_argument("front_metrics: empty input");
  const std::size_t m = approx.front().size();
  for (const auto& v : approx) {
    if (v.size() != m) throw std::invalid_argument("front_metrics: objective count mismatch");
  }
  for (const auto& v : reference) {
    if (v.size() != m) throw std::invalid_argument("front_metrics: objective count mismatch");
  }
  FrontMetrics out;
  out.generational_distance = generational_distance(approx, reference);
  for (std::size_t i = 0; i < m; ++i) {
    out.extreme_error =
        std::max(out.extreme_error, distance(per_objective_best(approx, i), per_objective_best(reference, i)));
  }
  if (m == 2) out.spread = spread_2d(approx);
  return out;
}

}  // namespace coaw
