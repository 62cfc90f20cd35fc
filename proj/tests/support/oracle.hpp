// Naive reference implementations used to derive expected values in tests.
// Everything here is written straight from the definitions and deliberately
// shares no code with the library beyond the plain data types.
#ifndef MOCS_TESTS_ORACLE_HPP
#define MOCS_TESTS_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "mocs/model.hpp"

namespace oracle {

using mocs::Point;
using mocs::ProblemDefinition;
using Idx = std::vector<std::size_t>;

inline constexpr double tau = 1e-9;

inline double eval(const mocs::LinearFunction& fn, const Point& x) {
  double v = fn.constant;
  for (const auto& t : fn.terms) v += t.coeff * x[t.var];
  return v;
}

inline bool satisfied(const mocs::Constraint& c, const Point& x) {
  const double l = eval(c.fn, x);
  switch (c.relation) {
    case mocs::Relation::LessEqual: return l <= c.rhs + tau;
    case mocs::Relation::GreaterEqual: return l >= c.rhs - tau;
    case mocs::Relation::Equal: return std::fabs(l - c.rhs) <= tau;
    case mocs::Relation::Less: return l < c.rhs - tau;
    case mocs::Relation::Greater: return l > c.rhs + tau;
  }
  return false;
}

inline Idx all(std::size_t n) {
  Idx v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Full grid by recursion; lexicographic because the first variable varies slowest.
inline void grid_rec(const ProblemDefinition& p, std::size_t k, Point& cur, std::vector<Point>& out) {
  if (k == p.variables.size()) {
    out.push_back(cur);
    return;
  }
  const auto& v = p.variables[k];
  for (std::size_t s = 0; s < v.steps; ++s) {
    cur[k] = v.steps == 1 ? v.min : (s + 1 == v.steps ? v.max : v.min + (v.max - v.min) * double(s) / double(v.steps - 1));
    grid_rec(p, k + 1, cur, out);
  }
}

inline std::vector<Point> grid(const ProblemDefinition& p) {
  std::vector<Point> out;
  Point cur(p.variables.size(), 0.0);
  grid_rec(p, 0, cur, out);
  return out;
}

inline bool valid(const ProblemDefinition& p, const Point& x, const Idx& S, const Idx& C) {
  for (auto i : S)
    for (const auto& c : p.subsystems[i].constraints)
      if (!satisfied(c, x)) return false;
  for (auto j : C)
    if (!satisfied(p.linking[j].constraint, x)) return false;
  return true;
}

inline std::vector<Point> valid_points(const ProblemDefinition& p, const std::vector<Point>& pts, const Idx& S,
                                       const Idx& C) {
  std::vector<Point> out;
  for (const auto& x : pts)
    if (valid(p, x, S, C)) out.push_back(x);
  return out;
}

inline std::vector<double> block(const ProblemDefinition& p, std::size_t i, const Point& x) {
  std::vector<double> out;
  for (const auto& f : p.subsystems[i].objectives) out.push_back(eval(f.fn, x));
  return out;
}

// Relation between xbar (scaled by s) and x on the blocks F.
// 0: strict (every block <= with a better component)
// 1: plain (every block <=, some block has a better component)
// 2: weak (every block <=)
inline bool dominates(const ProblemDefinition& p, const Idx& F, const Point& xbar, const Point& x, int rel,
                      double s = 1.0) {
  bool every_block_better = true;
  bool some_block_better = false;
  for (auto i : F) {
    const auto a = block(p, i, xbar);
    const auto b = block(p, i, x);
    bool le = true, lt = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (s * a[k] > b[k] + tau) le = false;
      if (s * a[k] < b[k] - tau) lt = true;
    }
    if (!le) return false;
    every_block_better = every_block_better && lt;
    some_block_better = some_block_better || lt;
  }
  if (rel == 0) return every_block_better;
  if (rel == 1) return some_block_better;
  return true;
}

inline bool same(const Point& a, const Point& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (std::fabs(a[k] - b[k]) > tau) return false;
  return true;
}

// kind: 0 weak superior, 1 superior, 2 strictly superior.
inline std::vector<Point> sup_within(const ProblemDefinition& p, const Idx& F, const std::vector<Point>& X, int kind,
                                     double eps = 0.0) {
  std::vector<Point> out;
  for (const auto& x : X) {
    bool beaten = false;
    for (const auto& xb : X) {
      if (kind == 0 && dominates(p, F, xb, x, 0, 1.0 + eps)) beaten = true;
      if (kind == 1 && dominates(p, F, xb, x, 1, 1.0 + eps)) beaten = true;
      if (kind == 2 && !same(xb, x) && dominates(p, F, xb, x, 2)) beaten = true;
      if (beaten) break;
    }
    if (!beaten) out.push_back(x);
  }
  return out;
}

inline std::vector<Point> sup(const ProblemDefinition& p, const std::vector<Point>& cand, const Idx& F, const Idx& S,
                              const Idx& C, int kind, double eps = 0.0) {
  return sup_within(p, F, valid_points(p, cand, S, C), kind, eps);
}

inline std::vector<double> aio(const ProblemDefinition& p, const Point& x) {
  std::vector<double> out;
  for (std::size_t i = 0; i < p.subsystems.size(); ++i) {
    auto b = block(p, i, x);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

// kind: 0 wE, 1 E, 2 sE.
inline std::vector<Point> efficient(const ProblemDefinition& p, const std::vector<Point>& cand, int kind) {
  const auto X = valid_points(p, cand, all(p.subsystems.size()), all(p.linking.size()));
  std::vector<Point> out;
  for (const auto& x : X) {
    const auto fx = aio(p, x);
    bool beaten = false;
    for (const auto& xb : X) {
      const auto fb = aio(p, xb);
      bool le = true, lt = false, all_lt = true;
      for (std::size_t k = 0; k < fx.size(); ++k) {
        if (fb[k] > fx[k] + tau) le = false;
        if (fb[k] < fx[k] - tau) lt = true;
        else all_lt = false;
      }
      if ((kind == 0 && all_lt) || (kind == 1 && le && lt) || (kind == 2 && le && !same(xb, x))) {
        beaten = true;
        break;
      }
    }
    if (!beaten) out.push_back(x);
  }
  return out;
}

inline bool contains(const std::vector<Point>& s, const Point& x) {
  return std::any_of(s.begin(), s.end(), [&](const Point& y) { return same(x, y); });
}

inline bool subset(const std::vector<Point>& a, const std::vector<Point>& b) {
  return std::all_of(a.begin(), a.end(), [&](const Point& x) { return contains(b, x); });
}

inline bool equal_sets(const std::vector<Point>& a, const std::vector<Point>& b) { return subset(a, b) && subset(b, a); }

// Linking constraints adjacent to order[pos] and to an earlier subsystem.
inline Idx stage_links(const ProblemDefinition& p, const Idx& order, std::size_t pos) {
  Idx out;
  for (std::size_t j = 0; j < p.linking.size(); ++j) {
    const auto& s = p.linking[j].subsystems;
    auto has = [&](std::size_t i) { return std::find(s.begin(), s.end(), i) != s.end(); };
    if (!has(order[pos])) continue;
    for (std::size_t k = 0; k < pos; ++k)
      if (has(order[k])) {
        out.push_back(j);
        break;
      }
  }
  return out;
}

// Staged filter of the incremental family. eps_last selects whether the last
// stage is eps-relaxed too.
inline std::vector<Point> staged(const ProblemDefinition& p, const std::vector<Point>& cand, const Idx& order,
                                 double eps, bool eps_last) {
  std::vector<Point> cur = cand;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const Idx s{order[pos]};
    const auto admissible = valid_points(p, cur, s, stage_links(p, order, pos));
    const bool last = pos + 1 == order.size();
    cur = sup_within(p, s, admissible, 1, (!last || eps_last) ? eps : 0.0);
  }
  return cur;
}

inline std::vector<Point> full_hierarchy(const ProblemDefinition& p, const std::vector<Point>& cand, const Idx& order) {
  auto cur = valid_points(p, cand, all(p.subsystems.size()), all(p.linking.size()));
  for (auto i : order) cur = sup_within(p, Idx{i}, cur, 1);
  return cur;
}

inline double l1(const Point& a, const Point& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d += std::fabs(a[k] - b[k]);
  return d;
}

}  // namespace oracle

#endif  // MOCS_TESTS_ORACLE_HPP
