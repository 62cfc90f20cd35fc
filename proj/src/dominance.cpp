#include "mocs/dominance.hpp"

#include <cassert>

#include "mocs/errors.hpp"
#include "parallel.hpp"

namespace mocs {

std::string_view to_string(SuperiorKind k) {
  switch (k) {
    case SuperiorKind::Weak: return "weak";
    case SuperiorKind::Plain: return "plain";
    case SuperiorKind::Strict: return "strict";
  }
  return "?";
}

std::string_view to_string(DominanceVerdict v) {
  switch (v) {
    case DominanceVerdict::StrictlyDominates: return "strictly-dominates";
    case DominanceVerdict::Dominates: return "dominates";
    case DominanceVerdict::WeaklyDominates: return "weakly-dominates";
    case DominanceVerdict::None: return "none";
  }
  return "?";
}

std::vector<double> objective_value(const ProblemDefinition& p, std::size_t subsystem, std::span<const double> x) {
  if (subsystem >= p.subsystems.size()) throw InvalidArgument("subsystem index out of range");
  if (x.size() != p.dimension()) throw InvalidArgument("point dimension mismatch");
  const auto& objs = p.subsystems[subsystem].objectives;
  std::vector<double> out;
  out.reserve(objs.size());
  for (const auto& f : objs) out.push_back(f.fn.evaluate(x));
  return out;
}

std::vector<double> aio_objective(const ProblemDefinition& p, std::span<const double> x) {
  std::vector<double> out;
  out.reserve(p.objective_dimension());
  for (std::size_t i = 0; i < p.subsystems.size(); ++i) {
    auto block = objective_value(p, i, x);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

namespace {

struct BlockCompare {
  bool all_le = true;
  bool any_lt = false;
};

BlockCompare compare_block(const double* a, const double* b, std::size_t n, double scale, double tol) {
  BlockCompare r;
  for (std::size_t k = 0; k < n; ++k) {
    const double av = scale * a[k];
    if (av > b[k] + tol) {
      r.all_le = false;
      return r;
    }
    if (av < b[k] - tol) r.any_lt = true;
  }
  return r;
}

// Objective values of the selected blocks for every point, row-major.
struct BlockTable {
  std::vector<std::size_t> offsets;  // block start within a row, plus the row width at the end
  std::vector<double> values;
  std::size_t width = 0;

  const double* row(std::size_t i) const { return values.data() + i * width; }
};

BlockTable tabulate(const ProblemDefinition& p, std::span<const std::size_t> blocks, const PointSet& points,
                    unsigned threads) {
  BlockTable t;
  for (auto b : blocks) {
    t.offsets.push_back(t.width);
    t.width += p.subsystems[b].objectives.size();
  }
  t.offsets.push_back(t.width);
  t.values.resize(points.size() * t.width);
  detail::parallel_for(points.size(), threads, [&](std::size_t i) {
    double* out = t.values.data() + i * t.width;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      const auto& objs = p.subsystems[blocks[bi]].objectives;
      for (std::size_t k = 0; k < objs.size(); ++k) out[t.offsets[bi] + k] = objs[k].fn.evaluate(points[i]);
    }
  });
  return t;
}

// Does row a (scaled) dominate row b under the system relation `kind`?
bool dominates_rows(const BlockTable& t, const double* a, const double* b, SuperiorKind kind, double scale,
                    double tol) {
  bool some_block_better = false;
  const std::size_t nblocks = t.offsets.size() - 1;
  for (std::size_t bi = 0; bi < nblocks; ++bi) {
    const std::size_t off = t.offsets[bi];
    const auto c = compare_block(a + off, b + off, t.offsets[bi + 1] - off, scale, tol);
    if (!c.all_le) return false;
    if (kind == SuperiorKind::Strict && !c.any_lt) return false;
    some_block_better = some_block_better || c.any_lt;
  }
  switch (kind) {
    case SuperiorKind::Strict: return nblocks > 0;
    case SuperiorKind::Plain: return some_block_better;
    case SuperiorKind::Weak: return true;
  }
  return false;
}

void check_objectives(const ProblemDefinition& p, std::span<const std::size_t> objectives) {
  if (objectives.empty()) throw InvalidArgument("objective scope F must be nonempty");
  for (auto i : objectives)
    if (i >= p.subsystems.size()) throw InvalidArgument("objective scope index out of range");
}

// Superior-set filter shared by every kind. `scale` multiplies the
// challenger's objective values (1 + eps).
PointSet filter_superior(const ProblemDefinition& p, std::span<const std::size_t> objectives, const PointSet& points,
                         SuperiorKind kind, double scale, const Options& opt) {
  check_objectives(p, objectives);
  const auto table = tabulate(p, objectives, points, opt.threads);
  const std::size_t n = points.size();
  // Superiority of x is defined through relations that x̄ must satisfy:
  // Weak excludes x when some x̄ strictly system-dominates it, Plain when some
  // x̄ system-dominates it, Strict when another x̄ weakly system-dominates it.
  const SuperiorKind relation = kind == SuperiorKind::Weak    ? SuperiorKind::Strict
                                : kind == SuperiorKind::Plain ? SuperiorKind::Plain
                                                              : SuperiorKind::Weak;
  std::vector<char> keep(n, 1);
  detail::parallel_for(n, opt.threads, [&](std::size_t i) {
    const double* xi = table.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      // x itself is a legitimate challenger except for strict superiority;
      // it only matters under eps-scaling of negative objective values.
      if (j == i && kind == SuperiorKind::Strict) continue;
      if (dominates_rows(table, table.row(j), xi, relation, scale, opt.tolerance)) {
        keep[i] = 0;
        return;
      }
    }
  });
  return points.select(keep);
}

}  // namespace

DominanceVerdict system_dominance(const ProblemDefinition& p, const Scope& scope, std::span<const double> xbar,
                                  std::span<const double> x, double tol) {
  if (system_dominates(p, scope, xbar, x, SuperiorKind::Strict, tol)) return DominanceVerdict::StrictlyDominates;
  if (system_dominates(p, scope, xbar, x, SuperiorKind::Plain, tol)) return DominanceVerdict::Dominates;
  if (system_dominates(p, scope, xbar, x, SuperiorKind::Weak, tol)) return DominanceVerdict::WeaklyDominates;
  return DominanceVerdict::None;
}

bool system_dominates(const ProblemDefinition& p, const Scope& scope, std::span<const double> xbar,
                      std::span<const double> x, SuperiorKind kind, double tol) {
  check_objectives(p, scope.objectives);
  scope.check(p);
  assert(is_valid(p, xbar, scope.subsystems, scope.linking, tol));
  assert(is_valid(p, x, scope.subsystems, scope.linking, tol));
  const auto table = tabulate(p, scope.objectives, PointSet::from_points(p.dimension(), {Point(xbar.begin(), xbar.end())}, 0.0), 1);
  std::vector<double> xb_row = table.values;
  const auto xt = tabulate(p, scope.objectives, PointSet::from_points(p.dimension(), {Point(x.begin(), x.end())}, 0.0), 1);
  return dominates_rows(table, xb_row.data(), xt.values.data(), kind, 1.0, tol);
}

PointSet superior_set(const ProblemDefinition& p, const Scope& scope, const PointSet& candidates, SuperiorKind kind,
                      const Options& opt) {
  check_objectives(p, scope.objectives);
  scope.check(p);
  const auto valid = filter_valid(p, candidates, scope.subsystems, scope.linking, opt);
  return filter_superior(p, scope.objectives, valid, kind, 1.0, opt);
}

PointSet eps_superior_set(const ProblemDefinition& p, const Scope& scope, const PointSet& candidates, double eps,
                          const Options& opt) {
  if (!(eps >= 0.0)) throw InvalidArgument("eps must be >= 0");
  check_objectives(p, scope.objectives);
  scope.check(p);
  const auto valid = filter_valid(p, candidates, scope.subsystems, scope.linking, opt);
  return filter_superior(p, scope.objectives, valid, SuperiorKind::Plain, 1.0 + eps, opt);
}

PointSet superior_within(const ProblemDefinition& p, std::span<const std::size_t> objectives, const PointSet& points,
                         SuperiorKind kind, const Options& opt) {
  return filter_superior(p, objectives, points, kind, 1.0, opt);
}

PointSet eps_superior_within(const ProblemDefinition& p, std::span<const std::size_t> objectives,
                             const PointSet& points, double eps, const Options& opt) {
  if (!(eps >= 0.0)) throw InvalidArgument("eps must be >= 0");
  return filter_superior(p, objectives, points, SuperiorKind::Plain, 1.0 + eps, opt);
}

PointSet aio_efficient_set(const ProblemDefinition& p, const PointSet& candidates, SuperiorKind kind,
                           const Options& opt) {
  const auto all = all_subsystems(p);
  const auto valid = filter_valid(p, candidates, all, all_linking(p), opt);
  const auto table = tabulate(p, all, valid, opt.threads);
  const std::size_t n = valid.size();
  const std::size_t w = table.width;
  const double tol = opt.tolerance;
  std::vector<char> keep(n, 1);
  detail::parallel_for(n, opt.threads, [&](std::size_t i) {
    const double* b = table.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double* a = table.row(j);
      bool all_le = true;
      bool any_lt = false;
      bool all_lt = true;
      for (std::size_t k = 0; k < w; ++k) {
        if (a[k] > b[k] + tol) all_le = false;
        if (a[k] < b[k] - tol)
          any_lt = true;
        else
          all_lt = false;
      }
      bool dominated = false;
      switch (kind) {
        case SuperiorKind::Plain: dominated = all_le && any_lt; break;
        case SuperiorKind::Weak: dominated = w > 0 && all_lt; break;
        case SuperiorKind::Strict: dominated = all_le; break;
      }
      if (dominated) {
        keep[i] = 0;
        return;
      }
    }
  });
  return valid.select(keep);
}

bool has_negative_objective(const ProblemDefinition& p, std::span<const std::size_t> objectives,
                            const PointSet& points, double tol) {
  for (const auto& x : points)
    for (auto i : objectives)
      for (const auto& f : p.subsystems[i].objectives)
        if (f.fn.evaluate(x) < -tol) return true;
  return false;
}

}  // namespace mocs
