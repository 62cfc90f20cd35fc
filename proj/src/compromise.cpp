#include "mocs/compromise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mocs/dominance.hpp"
#include "mocs/errors.hpp"

namespace mocs {

ReferenceSet ReferenceSet::from_points(std::vector<Point> pts) {
  ReferenceSet r;
  r.provenance.assign(pts.size(), std::nullopt);
  r.points = std::move(pts);
  return r;
}

double l1_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InvalidArgument("point dimension mismatch");
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d += std::abs(a[k] - b[k]);
  return d;
}

double l1_distance(std::span<const double> x, const PointSet& m) {
  if (m.empty()) throw InvalidArgument("l1 distance to an empty set");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& y : m) best = std::min(best, l1_distance(x, y));
  return best;
}

double median_objective(const ReferenceSet& r, std::span<const double> x) {
  double total = 0.0;
  for (const auto& y : r.points) total += l1_distance(x, y);
  return total;
}

std::pair<Point, double> median_compromise_bruteforce(const std::vector<PointSet>& reference_sets,
                                                      const PointSet& candidates, double tol) {
  if (reference_sets.empty() || candidates.empty()) throw InvalidArgument("empty compromise input");
  for (const auto& s : reference_sets)
    if (s.empty()) throw InvalidArgument("empty reference set");
  const Point* best = nullptr;
  double best_value = 0.0;
  for (const auto& x : candidates) {
    double v = 0.0;
    for (const auto& s : reference_sets) v += l1_distance(x, s);
    if (best == nullptr || v < best_value - tol) {
      best = &x;
      best_value = v;
    }
  }
  return {*best, best_value};
}

namespace {

void check_references(const ReferenceSet& r) {
  if (r.points.empty()) throw InvalidArgument("reference set must be nonempty");
  for (const auto& y : r.points)
    if (y.size() != r.dimension()) throw InvalidArgument("reference points differ in dimension");
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> median_bounds(const ReferenceSet& r) {
  check_references(r);
  const std::size_t n = r.points.size();
  const std::size_t l = (n + 1) / 2;  // ceil(n/2), 1-indexed
  const std::size_t u = n / 2 + 1;
  std::vector<double> lb(r.dimension());
  std::vector<double> ub(r.dimension());
  std::vector<double> column(n);
  for (std::size_t k = 0; k < r.dimension(); ++k) {
    for (std::size_t j = 0; j < n; ++j) column[j] = r.points[j][k];
    std::ranges::sort(column);
    lb[k] = column[l - 1];
    ub[k] = column[u - 1];
  }
  return {lb, ub};
}

bool check_median_optimality(const ReferenceSet& r, std::span<const double> x, double tol) {
  check_references(r);
  if (x.size() != r.dimension()) throw InvalidArgument("point dimension mismatch");
  for (std::size_t k = 0; k < x.size(); ++k) {
    std::size_t at_or_below = 0, above = 0, at_or_above = 0, below = 0;
    for (const auto& y : r.points) {
      if (y[k] <= x[k] + tol) ++at_or_below;
      else ++above;
      if (y[k] >= x[k] - tol) ++at_or_above;
      else ++below;
    }
    if (at_or_below < above || at_or_above < below) return false;
  }
  return true;
}

namespace {

// Dense phase-1 simplex for {A z = b, z >= 0} with b >= 0, Bland's rule.
// Returns z or nullopt when infeasible.
std::optional<std::vector<double>> phase_one(std::vector<std::vector<double>> a, std::vector<double> b,
                                             double feas_tol) {
  constexpr double kPivotTol = 1e-12;
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a.front().size();
  const std::size_t cols = n + m;
  // Tableau rows: [A | I | b]; artificials n..n+m-1 start basic.
  std::vector<std::vector<double>> t(m, std::vector<double>(cols + 1, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0.0) {
      for (auto& v : a[i]) v = -v;
      b[i] = -b[i];
    }
    std::copy(a[i].begin(), a[i].end(), t[i].begin());
    t[i][n + i] = 1.0;
    t[i][cols] = b[i];
    basis[i] = n + i;
  }
  // Reduced costs of the phase-1 objective sum(artificials).
  std::vector<double> cost(cols + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= cols; ++j)
      if (j < n || j == cols) cost[j] -= t[i][j];

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j] < -kPivotTol) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    double best_ratio = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= kPivotTol) continue;
      const double ratio = t[i][cols] / t[i][enter];
      if (leave == m || ratio < best_ratio - kPivotTol ||
          (ratio <= best_ratio + kPivotTol && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase 1
    const double piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0.0) continue;
      const double f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    const double f = cost[enter];
    for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  if (-cost[cols] > feas_tol) return std::nullopt;
  std::vector<double> z(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) z[basis[i]] = std::max(0.0, t[i][cols]);
  return z;
}

}  // namespace

std::pair<Point, std::vector<double>> convex_combination_solve(const ReferenceSet& r, std::span<const double> lb,
                                                              std::span<const double> ub, double tol) {
  check_references(r);
  const std::size_t d = r.dimension();
  const std::size_t n = r.points.size();
  if (lb.size() != d || ub.size() != d) throw InvalidArgument("bound dimension mismatch");
  for (std::size_t k = 0; k < d; ++k)
    if (lb[k] > ub[k] + tol) throw InvalidArgument("lb must not exceed ub");

  // Unknowns: lambda_1..n, s_1..d (x - lb), t_1..d (ub - x).
  const std::size_t vars = n + 2 * d;
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<double> row(vars, 0.0);
    for (std::size_t j = 0; j < n; ++j) row[j] = r.points[j][k];
    row[n + k] = -1.0;
    a.push_back(std::move(row));
    b.push_back(lb[k]);
  }
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<double> row(vars, 0.0);
    row[n + k] = 1.0;
    row[n + d + k] = 1.0;
    a.push_back(std::move(row));
    b.push_back(std::max(0.0, ub[k] - lb[k]));
  }
  std::vector<double> ones(vars, 0.0);
  std::fill(ones.begin(), ones.begin() + static_cast<std::ptrdiff_t>(n), 1.0);
  a.push_back(std::move(ones));
  b.push_back(1.0);

  const auto z = phase_one(std::move(a), std::move(b), std::max(tol, 1e-9));
  if (!z) throw InternalError("no convex combination of the references lies in the median box");
  // Pivoting leaves round-off in the basis; drop it so the certificate is clean.
  std::vector<double> lambdas(z->begin(), z->begin() + static_cast<std::ptrdiff_t>(n));
  double total = 0.0;
  for (auto& l : lambdas) {
    if (l < 1e-12) l = 0.0;
    total += l;
  }
  for (auto& l : lambdas) l /= total;
  Point x(d, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < d; ++k) x[k] += lambdas[j] * r.points[j][k];
  for (std::size_t k = 0; k < d; ++k) x[k] = std::clamp(x[k], lb[k], std::max(lb[k], ub[k]));
  return {x, lambdas};
}

CompromiseSolution l1_compromise(const ReferenceSet& r, double tol) {
  CompromiseSolution s;
  std::tie(s.lb, s.ub) = median_bounds(r);
  std::tie(s.x_star, s.lambdas) = convex_combination_solve(r, s.lb, s.ub, tol);
  s.objective = median_objective(r, s.x_star);
  return s;
}

std::vector<std::size_t> farthest_point_subset(const std::vector<Point>& pts, std::size_t max_count) {
  std::vector<std::size_t> chosen;
  if (pts.empty() || max_count == 0) return chosen;
  if (pts.size() <= max_count) {
    for (std::size_t i = 0; i < pts.size(); ++i) chosen.push_back(i);
    return chosen;
  }
  std::size_t seed = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (std::ranges::lexicographical_compare(pts[i], pts[seed])) seed = i;
  std::vector<double> nearest(pts.size(), std::numeric_limits<double>::infinity());
  std::vector<char> taken(pts.size(), 0);
  std::size_t next = seed;
  while (chosen.size() < max_count) {
    chosen.push_back(next);
    taken[next] = 1;
    for (std::size_t i = 0; i < pts.size(); ++i) nearest[i] = std::min(nearest[i], l1_distance(pts[i], pts[next]));
    std::size_t far = pts.size();
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (!taken[i] && (far == pts.size() || nearest[i] > nearest[far])) far = i;
    if (far == pts.size()) break;
    next = far;
  }
  std::ranges::sort(chosen);
  return chosen;
}

ReferenceSet subsystem_superior_references(const ProblemDefinition& p, const PointSet& candidates,
                                           std::size_t max_per_subsystem, const Options& opt) {
  ReferenceSet r;
  for (std::size_t i = 0; i < p.subsystems.size(); ++i) {
    const auto sup = superior_set(p, Scope::make({i}, {i}, {}), candidates, SuperiorKind::Plain, opt);
    for (auto idx : farthest_point_subset(sup.points(), max_per_subsystem)) {
      r.points.push_back(sup[idx]);
      r.provenance.emplace_back(i);
    }
  }
  if (r.points.empty()) throw InvalidArgument("no subsystem has a superior point on the candidates");
  return r;
}

}  // namespace mocs
