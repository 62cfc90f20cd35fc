#ifndef MOCS_COMPROMISE_HPP
#define MOCS_COMPROMISE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mocs/model.hpp"

namespace mocs {

/// Reference points r^1..r^n. A multiset: repeated points count separately
/// towards the median ranks.
struct ReferenceSet {
  std::vector<Point> points;
  std::vector<std::optional<std::size_t>> provenance;  ///< subsystem each point stands for, if known

  [[nodiscard]] std::size_t dimension() const { return points.empty() ? 0 : points.front().size(); }
  static ReferenceSet from_points(std::vector<Point> pts);
};

struct CompromiseSolution {
  Point x_star;
  std::vector<double> lb;
  std::vector<double> ub;
  std::vector<double> lambdas;  ///< convex-combination certificate, one per reference point
  double objective = 0.0;       ///< sum of l1 distances to the reference points
};

[[nodiscard]] double l1_distance(std::span<const double> a, std::span<const double> b);
/// Distance to the nearest point of m. Throws InvalidArgument if m is empty.
[[nodiscard]] double l1_distance(std::span<const double> x, const PointSet& m);

/// Sum of l1 distances from x to every reference point.
[[nodiscard]] double median_objective(const ReferenceSet& r, std::span<const double> x);

/// Candidate minimizing the summed l1 distance to the sets; ties go to the
/// lexicographically smallest candidate.
[[nodiscard]] std::pair<Point, double> median_compromise_bruteforce(const std::vector<PointSet>& reference_sets,
                                                                    const PointSet& candidates,
                                                                    double tol = kDefaultTolerance);

/// Per coordinate, the values at ranks ceil(n/2) and floor(n/2)+1 of the
/// sorted reference coordinates.
[[nodiscard]] std::pair<std::vector<double>, std::vector<double>> median_bounds(const ReferenceSet& r);

/// Counting conditions: in every coordinate at least as many reference values
/// lie at or below x as strictly above it, and at least as many at or above
/// as strictly below.
[[nodiscard]] bool check_median_optimality(const ReferenceSet& r, std::span<const double> x,
                                           double tol = kDefaultTolerance);

/// Finds lambda >= 0 summing to one with lb <= sum lambda_j r^j <= ub, by a
/// phase-1 simplex with Bland's rule. Throws InternalError when infeasible.
[[nodiscard]] std::pair<Point, std::vector<double>> convex_combination_solve(const ReferenceSet& r,
                                                                            std::span<const double> lb,
                                                                            std::span<const double> ub,
                                                                            double tol = kDefaultTolerance);

[[nodiscard]] CompromiseSolution l1_compromise(const ReferenceSet& r, double tol = kDefaultTolerance);

/// Indices of at most max_count points chosen by farthest-point selection in
/// l1, seeded with the lexicographically smallest point; ties go to the lower
/// index. Returned ascending.
[[nodiscard]] std::vector<std::size_t> farthest_point_subset(const std::vector<Point>& pts, std::size_t max_count);

/// Union over subsystems of Sup(i, i, ∅) on the candidates, each thinned to
/// at most max_per_subsystem points.
[[nodiscard]] ReferenceSet subsystem_superior_references(const ProblemDefinition& p, const PointSet& candidates,
                                                         std::size_t max_per_subsystem, const Options& opt = {});

}  // namespace mocs

#endif  // MOCS_COMPROMISE_HPP
