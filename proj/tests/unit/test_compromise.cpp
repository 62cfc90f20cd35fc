#include <limits>

#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"
#include "mocs/compromise.hpp"
#include "mocs/errors.hpp"
#include "mocs/io.hpp"
#include "oracle.hpp"

using namespace mocs;
using Vec = std::vector<double>;

namespace {

ReferenceSet example_refs() {
  return ReferenceSet::from_points({{0.5, 0}, {0.5, 0}, {1.5, 0}, {1.8, 0.2}, {2, 0.5}, {2, 0.5}});
}

double brute_objective(const ReferenceSet& r, const Point& x) {
  double s = 0.0;
  for (const auto& q : r.points) s += oracle::l1(x, q);
  return s;
}

void check_certificate(const ReferenceSet& r, const CompromiseSolution& s) {
  double total = 0.0;
  Point x(r.dimension(), 0.0);
  for (std::size_t j = 0; j < r.points.size(); ++j) {
    CHECK(s.lambdas[j] >= 0.0);
    total += s.lambdas[j];
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += s.lambdas[j] * r.points[j][k];
  }
  CHECK(total == doctest::Approx(1.0));
  for (std::size_t k = 0; k < x.size(); ++k) {
    CHECK(x[k] == doctest::Approx(s.x_star[k]));
    CHECK(s.x_star[k] >= s.lb[k] - 1e-9);
    CHECK(s.x_star[k] <= s.ub[k] + 1e-9);
  }
}

}  // namespace

TEST_CASE("l1 distances") {
  CHECK(l1_distance(Vec{0, 0}, Vec{1, -2}) == 3.0);
  const auto m = fx::set(2, {{0, 0}, {5, 5}});
  CHECK(l1_distance(Vec{4, 4}, m) == 2.0);
  CHECK_THROWS_AS((void)l1_distance(Vec{0, 0}, PointSet(2)), InvalidArgument);
}

TEST_CASE("median bounds of the six reference points") {
  const auto r = example_refs();
  const auto [lb, ub] = median_bounds(r);
  CHECK(lb == Vec{1.5, 0});
  CHECK(ub == Vec{1.8, 0.2});
  const auto odd = ReferenceSet::from_points({{3}, {1}, {2}});
  CHECK(median_bounds(odd).first == Vec{2});
  CHECK(median_bounds(odd).second == Vec{2});
}

TEST_CASE("compromise on the six reference points") {
  const auto r = example_refs();
  const auto s = l1_compromise(r);
  check_certificate(r, s);
  CHECK(check_median_optimality(r, s.x_star));
  CHECK(s.objective == doctest::Approx(brute_objective(r, s.x_star)));
  // grid oracle with step 0.1 over [0,3]^2 (the acceptance binary uses 0.01)
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 30; ++i)
    for (int j = 0; j <= 30; ++j) best = std::min(best, brute_objective(r, Point{i * 0.1, j * 0.1}));
  CHECK(s.objective == doctest::Approx(best).epsilon(1e-9));
  CHECK(s.objective == doctest::Approx(4.5));
  CHECK(parse_points(R"({"points": [[0.5, 0], {"x": [1, 2]}]})").size() == 2);
}

TEST_CASE("counting conditions characterize the l1 median") {
  for (unsigned seed = 0; seed < 30; ++seed) {
    gen::Rng rng(seed);
    std::vector<Point> pts;
    const int n = rng.uniform(1, 6);
    for (int j = 0; j < n; ++j) pts.push_back(Point{double(rng.uniform(0, 4)), double(rng.uniform(0, 4))});
    const auto r = ReferenceSet::from_points(pts);
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 8; ++i)
      for (int j = 0; j <= 8; ++j) best = std::min(best, brute_objective(r, Point{i * 0.5, j * 0.5}));
    for (int i = 0; i <= 8; ++i)
      for (int j = 0; j <= 8; ++j) {
        const Point x{i * 0.5, j * 0.5};
        CHECK_MESSAGE(check_median_optimality(r, x) == (brute_objective(r, x) <= best + 1e-9), "seed " << seed);
      }
    const auto s = l1_compromise(r);
    check_certificate(r, s);
    CHECK(s.objective == doctest::Approx(best));
  }
}

TEST_CASE("simplex reports an empty box") {
  const auto r = ReferenceSet::from_points({{0, 0}, {1, 1}});
  CHECK_THROWS_AS((void)convex_combination_solve(r, Vec{0, 1}, Vec{0, 1}), InternalError);
  CHECK_THROWS_AS((void)convex_combination_solve(r, Vec{1, 0}, Vec{0, 0}), InvalidArgument);
  const auto [x, lambdas] = convex_combination_solve(r, Vec{0.25, 0.25}, Vec{0.5, 0.5});
  CHECK(x[0] == doctest::Approx(x[1]));
  CHECK(x[0] >= 0.25 - 1e-9);
  CHECK(x[0] <= 0.5 + 1e-9);
}

TEST_CASE("brute-force median over reference sets") {
  const auto cand = fx::set(1, {{0}, {1}, {2}, {3}});
  const std::vector<PointSet> sets{fx::set(1, {{0}, {3}}), fx::set(1, {{1}}), fx::set(1, {{2}})};
  const auto [x, v] = median_compromise_bruteforce(sets, cand);
  CHECK(x == Point{1});  // 1 and 2 tie at 1, the smaller wins
  CHECK(v == 2.0);
}

TEST_CASE("farthest-point thinning") {
  const std::vector<Point> pts{{2}, {0}, {1}, {10}};
  CHECK(farthest_point_subset(pts, 2) == std::vector<std::size_t>{1, 3});
  CHECK(farthest_point_subset(pts, 3) == std::vector<std::size_t>{0, 1, 3});
  CHECK(farthest_point_subset(pts, 9).size() == 4);
  CHECK(farthest_point_subset(pts, 0).empty());
}

TEST_CASE("compromise of superior references need not be system valid") {
  const auto p = fx::load("invalid_compromise");
  const auto grid = candidate_grid(p);
  const auto r = subsystem_superior_references(p, grid, 8);
  CHECK(r.points == std::vector<Point>{{3, 4}, {7, 4}});
  CHECK(r.provenance[0] == std::optional<std::size_t>{0});
  const auto s = l1_compromise(r);
  check_certificate(r, s);
  CHECK_FALSE(is_valid(p, s.x_star, all_subsystems(p), all_linking(p), 1e-9));
  // each reference is valid for its own subsystem
  CHECK(is_valid(p, r.points[0], std::vector<std::size_t>{0}, {}, 1e-9));
  CHECK(is_valid(p, r.points[1], std::vector<std::size_t>{1}, {}, 1e-9));
}
