#include <stdexcept>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"

#include "brute_force.hpp"
#include "coaw/pareto.hpp"

using namespace coaw;

namespace {

std::vector<Vector> random_points(std::mt19937_64& rng, std::size_t n, std::size_t m, bool coarse) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> grid(0, 5);
  std::vector<Vector> pts(n, Vector(m));
  for (auto& p : pts) {
    for (auto& v : p) v = coarse ? double(grid(rng)) : u(rng);
  }
  return pts;
}

}  // namespace

TEST_SUITE("pareto") {
  TEST_CASE("dominates") {
    CHECK(dominates(Vector{1, 1}, Vector{2, 2}));
    CHECK_FALSE(dominates(Vector{1, 2}, Vector{2, 1}));
    CHECK_FALSE(dominates(Vector{2, 1}, Vector{1, 2}));
    CHECK_FALSE(dominates(Vector{1, 1}, Vector{1, 1}));
    CHECK(dominates(Vector{1, 1}, Vector{1, 2}));
    CHECK_THROWS_AS(dominates(Vector{1, 1}, Vector{1, 1, 1}), std::invalid_argument);
  }

  TEST_CASE("dominance is a strict partial order on random triples") {
    std::mt19937_64 rng(1);
    std::size_t violations = 0;
    for (int t = 0; t < 20000; ++t) {
      const auto pts = random_points(rng, 3, 2 + t % 2, t % 2 == 0);
      const auto &a = pts[0], &b = pts[1], &c = pts[2];
      violations += dominates(a, a);
      violations += dominates(a, b) && dominates(b, a);
      violations += dominates(a, b) && dominates(b, c) && !dominates(a, c);
    }
    CHECK(violations == 0);
  }

  TEST_CASE("pareto_filter examples") {
    const std::vector<Vector> pts{{1, 2}, {2, 1}, {2, 2}};
    CHECK(pareto_filter(pts) == std::vector<std::size_t>{0, 1});
    const std::vector<Vector> single{{3, 3}};
    CHECK(pareto_filter(single) == std::vector<std::size_t>{0});
    const std::vector<Vector> dups{{2, 2}, {1, 3}, {2, 2}, {1, 3}};
    CHECK(pareto_filter(dups) == std::vector<std::size_t>{0, 1});
    const std::vector<Vector> three{{1, 2, 3}, {1, 2, 3}, {3, 2, 1}, {3, 3, 3}};
    CHECK(pareto_filter(three) == std::vector<std::size_t>{0, 2});
    CHECK(pareto_filter(std::span<const Vector>{}).empty());
  }

  TEST_CASE("pareto_filter agrees with the all-pairs filter") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 200; ++t) {
      const std::size_t m = 2 + t % 3;
      const auto pts = random_points(rng, 200, m, t % 4 == 0);
      CHECK(pareto_filter(pts) == coaw::testing::brute_force_filter(pts));
    }
  }

  TEST_CASE("pareto_filter is idempotent and order-insensitive") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
      const auto pts = random_points(rng, 150, 2 + t % 2, false);
      const auto idx = pareto_filter(pts);
      std::vector<Vector> front;
      for (auto i : idx) front.push_back(pts[i]);
      CHECK(pareto_filter(front).size() == front.size());

      std::vector<std::size_t> perm(pts.size());
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<Vector> shuffled;
      for (auto i : perm) shuffled.push_back(pts[i]);
      std::vector<Vector> front2;
      for (auto i : pareto_filter(shuffled)) front2.push_back(shuffled[i]);
      std::sort(front.begin(), front.end());
      std::sort(front2.begin(), front2.end());
      CHECK(front == front2);
    }
  }

  TEST_CASE("archive_insert examples") {
    ParetoArchive a;
    CHECK(a.insert({0.5, 0.5}, {1, 2}, true));
    CHECK(a.size() == 1);
    CHECK_FALSE(a.insert({0.5, 0.5}, {1, 2}, true));  // duplicate
    CHECK(a.size() == 1);
    CHECK(a.insert({0.1, 0.1}, {2, 1}, true));
    CHECK_FALSE(a.insert({0.1, 0.1}, {3, 3}, true));  // dominated
    CHECK_FALSE(a.insert({0.1, 0.1}, {-5, -5}, false));  // infeasible
    CHECK(a.size() == 2);
    CHECK(a.insert({0, 0}, {0, 0}, true));
    REQUIRE(a.size() == 1);
    CHECK(a.entries()[0].f == Vector{0, 0});
    CHECK_THROWS_AS(a.insert({0, 0}, {std::nan(""), 0}, true), std::invalid_argument);
  }

  TEST_CASE("archive invariants hold after each of 1e4 random inserts") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> coarse(0, 20);
    ParetoArchive a;
    std::vector<Vector> all;
    std::size_t broken = 0;
    for (int i = 0; i < 10000; ++i) {
      Vector f = i % 2 ? Vector{u(rng), u(rng)} : Vector{coarse(rng) / 20.0, coarse(rng) / 20.0};
      const bool feasible = i % 7 != 0;
      a.insert({double(i)}, f, feasible);
      if (feasible) all.push_back(f);
      if (i % 50 == 0 || i == 9999) broken += !a.invariants_hold();
    }
    CHECK(broken == 0);
    // Final archive equals the nondominated set of everything feasible.
    std::vector<Vector> expected;
    for (auto i : coaw::testing::brute_force_filter(all)) expected.push_back(all[i]);
    auto got = objectives_of(a.entries());
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }

  TEST_CASE("sorted archive is ordered by f1 then f2") {
    ParetoArchive a;
    a.insert({}, {3, 0}, true);
    a.insert({}, {0, 3}, true);
    a.insert({}, {1, 1}, true);
    const auto s = a.sorted();
    CHECK(s[0].f == Vector{0, 3});
    CHECK(s[1].f == Vector{1, 1});
    CHECK(s[2].f == Vector{3, 0});
  }

  TEST_CASE("front_metrics identity and translation") {
    const std::vector<Vector> ref{{0, 3}, {1, 2}, {2, 1}, {3, 0}};
    auto m = front_metrics(ref, ref);
    CHECK(m.generational_distance == 0.0);
    CHECK(m.extreme_error == 0.0);
    REQUIRE(m.spread.has_value());
    CHECK(*m.spread == doctest::Approx(0.0).epsilon(1e-12));

    std::vector<Vector> shifted = ref;
    for (auto& p : shifted) p[0] += 0.1;
    m = front_metrics(shifted, ref);
    CHECK(m.generational_distance == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(m.generational_distance == doctest::Approx(coaw::testing::naive_gd(shifted, ref)));
    CHECK(m.extreme_error == doctest::Approx(0.1).epsilon(1e-12));

    const std::vector<Vector> sub{{1, 2}};
    CHECK(front_metrics(sub, ref).generational_distance == 0.0);
    CHECK_THROWS_AS(front_metrics(std::span<const Vector>{}, ref), std::invalid_argument);
  }

  TEST_CASE("spread of uneven gaps") {
    // Gaps 1 and 3 along a line: mean 2, population std 1.
    const std::vector<Vector> pts{{0, 4}, {1, 4}, {4, 4}};
    CHECK(spread_2d(pts) == doctest::Approx(0.5));
    const std::vector<Vector> three_obj{{0, 0, 1}, {1, 0, 0}};
    CHECK_FALSE(front_metrics(three_obj, three_obj).spread.has_value());
  }

  TEST_CASE("extreme error measures the distance to the analytic p3 endpoints") {
    std::vector<Vector> ref;
    for (int i = 0; i <= 1000; ++i) {
      const double t = -1.0 + 2.0 * i / 1000.0;
      ref.push_back({t, t * t * t - 3 * t});
    }
    const std::vector<Vector> approx{{-0.9, 2.0}, {0.0, 0.0}, {1.0, -1.9}};
    const auto m = front_metrics(approx, ref);
    // Per-objective best points: (-0.9, 2) vs (-1, 2) and (1, -1.9) vs (1, -2).
    CHECK(m.extreme_error == doctest::Approx(0.1).epsilon(1e-9));
  }
}
