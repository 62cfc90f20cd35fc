#include "mocs/structure.hpp"

#include <algorithm>
#include <numeric>

#include "mocs/errors.hpp"
#include "mocs/transform.hpp"

namespace mocs {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t a) {
  while (parent[a] != a) a = parent[a] = parent[parent[a]];
  return a;
}

}  // namespace

IndependenceReport detect_independence(const ProblemDefinition& p) {
  const auto inl = inline_linking(p);
  const std::size_t m = inl.subsystems.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::size_t> owner(inl.variables.size(), m);
  for (std::size_t s = 0; s < m; ++s) {
    for (auto v : inl.subsystems[s].variables) {
      if (owner[v] == m) {
        owner[v] = s;
        continue;
      }
      const auto a = find_root(parent, s);
      const auto b = find_root(parent, owner[v]);
      parent[std::max(a, b)] = std::min(a, b);
    }
  }
  IndependenceReport r;
  std::vector<std::size_t> slot(m, m);
  for (std::size_t s = 0; s < m; ++s) {
    const auto root = find_root(parent, s);
    if (slot[root] == m) {
      slot[root] = r.components.size();
      r.components.emplace_back();
    }
    r.components[slot[root]].push_back(s);
  }
  const auto kinds = classify_variables(build_graph(p));
  r.independent = p.linking.empty() && std::ranges::none_of(kinds, [](VariableKind k) { return k == VariableKind::Global; });
  return r;
}

PointSet subgrid(const ProblemDefinition& p, std::span<const std::size_t> vars, const Options& opt) {
  std::size_t total = 1;
  for (auto v : vars) {
    const auto steps = p.variables.at(v).steps;
    if (total > opt.grid_cap / steps) throw CapExceeded("sub-grid exceeds the grid cap");
    total *= steps;
  }
  std::vector<Point> pts;
  pts.reserve(total);
  std::vector<std::size_t> idx(vars.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    Point x(p.dimension(), 0.0);
    for (std::size_t k = 0; k < vars.size(); ++k) x[vars[k]] = p.variables[vars[k]].grid_value(idx[k]);
    pts.push_back(std::move(x));
    for (std::size_t k = vars.size(); k-- > 0;) {
      if (++idx[k] < p.variables[vars[k]].steps) break;
      idx[k] = 0;
    }
  }
  return PointSet::from_points(p.dimension(), std::move(pts), opt.tolerance);
}

PointSet block_superior_set(const ProblemDefinition& p, std::size_t i, SuperiorKind kind, const Options& opt) {
  if (i >= p.subsystems.size()) throw InvalidArgument("subsystem index out of range");
  const auto& vars = p.subsystems[i].variables;
  const std::vector<std::size_t> s{i};
  const auto grid = subgrid(p, vars, opt);
  const auto valid = filter_valid(p, grid, s, {}, opt);
  const auto sup = superior_within(p, s, valid, kind, opt);
  std::vector<Point> projected;
  for (const auto& x : sup) projected.push_back(extract_subvector(x, vars));
  return PointSet::from_points(vars.size(), std::move(projected), opt.tolerance);
}

PointSet compose_block_diagonal(const ProblemDefinition& p, const std::vector<PointSet>& per_block_sets,
                                const Options& opt) {
  if (!detect_independence(p).independent) throw InvalidArgument("problem is not block diagonal");
  if (per_block_sets.size() != p.subsystems.size()) throw InvalidArgument("one point set per subsystem required");
  std::size_t total = 1;
  for (std::size_t b = 0; b < per_block_sets.size(); ++b) {
    if (per_block_sets[b].dimension() != p.subsystems[b].variables.size())
      throw InvalidArgument("block point set dimension mismatch");
    if (per_block_sets[b].empty()) return PointSet(p.dimension());
    if (total > opt.grid_cap / per_block_sets[b].size()) throw CapExceeded("block product exceeds the grid cap");
    total *= per_block_sets[b].size();
  }
  std::vector<Point> out;
  out.reserve(total);
  std::vector<std::size_t> idx(per_block_sets.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    Point x(p.dimension(), 0.0);
    for (std::size_t b = 0; b < per_block_sets.size(); ++b) {
      const auto& part = per_block_sets[b][idx[b]];
      const auto& vars = p.subsystems[b].variables;
      for (std::size_t k = 0; k < vars.size(); ++k) x[vars[k]] = part[k];
    }
    out.push_back(std::move(x));
    for (std::size_t b = per_block_sets.size(); b-- > 0;) {
      if (++idx[b] < per_block_sets[b].size()) break;
      idx[b] = 0;
    }
  }
  return PointSet::from_points(p.dimension(), std::move(out), opt.tolerance);
}

SeparableSystem make_separable(const ProblemDefinition& p, std::vector<std::vector<double>> weights) {
  if (!p.linking.empty()) throw ValidationError("separable systems cannot have linking constraints");
  if (weights.size() != p.subsystems.size()) throw InvalidArgument("one weight vector per subsystem required");
  bool any_positive = false;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].size() != p.subsystems[i].objectives.size())
      throw InvalidArgument("weight vector length must equal the subsystem's objective count");
    for (double w : weights[i]) {
      if (!(w >= 0.0)) throw InvalidArgument("weights must be nonnegative");
      any_positive = any_positive || w > 0.0;
    }
  }
  if (!any_positive) throw InvalidArgument("weights must not all be zero");

  const auto kinds = classify_variables(build_graph(p));
  SeparableSystem s;
  s.weights = std::move(weights);
  for (std::size_t v = 0; v < kinds.size(); ++v)
    if (kinds[v] == VariableKind::Global) s.shared.push_back(v);
  s.blocks.resize(p.subsystems.size());
  s.block_constraints.resize(p.subsystems.size());
  for (std::size_t i = 0; i < p.subsystems.size(); ++i) {
    for (auto v : p.subsystems[i].variables)
      if (kinds[v] == VariableKind::Local) s.blocks[i].push_back(v);
    for (const auto& c : p.subsystems[i].constraints) {
      bool uses_shared = false;
      bool uses_local = false;
      for (const auto& t : c.fn.terms) {
        if (kinds[t.var] == VariableKind::Global)
          uses_shared = true;
        else
          uses_local = true;
      }
      if (uses_shared && uses_local)
        throw ValidationError("constraint '" + c.name + "' mixes shared and local variables");
      (uses_shared ? s.shared_constraints : s.block_constraints[i]).push_back(c);
    }
  }
  return s;
}

double weighted_sum(const ProblemDefinition& p, const std::vector<std::vector<double>>& weights,
                    std::span<const double> x) {
  double total = 0.0;
  for (std::size_t i = 0; i < p.subsystems.size(); ++i) {
    const auto& objs = p.subsystems[i].objectives;
    for (std::size_t k = 0; k < objs.size(); ++k) total += weights[i][k] * objs[k].fn.evaluate(x);
  }
  return total;
}

namespace {

// Weighted sum restricted to the terms on `vars`; the constant is included
// only for local blocks so every constant is counted once.
double partial_value(const ProblemDefinition& p, const SeparableSystem& s, std::span<const double> x,
                     const std::vector<char>& in_vars, bool with_constant, std::size_t only_block) {
  double total = 0.0;
  for (std::size_t i = 0; i < p.subsystems.size(); ++i) {
    if (only_block != p.subsystems.size() && i != only_block) continue;
    const auto& objs = p.subsystems[i].objectives;
    for (std::size_t k = 0; k < objs.size(); ++k) {
      double v = with_constant ? objs[k].fn.constant : 0.0;
      for (const auto& t : objs[k].fn.terms)
        if (in_vars[t.var]) v += t.coeff * x[t.var];
      total += s.weights[i][k] * v;
    }
  }
  return total;
}

struct BlockOptimum {
  Point x;
  double value = 0.0;
};

BlockOptimum minimize_block(const ProblemDefinition& p, const SeparableSystem& s, std::span<const std::size_t> vars,
                            const std::vector<Constraint>& cons, bool with_constant, std::size_t only_block,
                            const Options& opt) {
  std::vector<char> in_vars(p.dimension(), 0);
  for (auto v : vars) in_vars[v] = 1;
  const auto grid = subgrid(p, vars, opt);
  bool found = false;
  BlockOptimum best;
  for (const auto& x : grid) {
    if (std::ranges::any_of(vars, [&](std::size_t v) { return x[v] < 0.0; })) continue;
    if (!std::ranges::all_of(cons, [&](const Constraint& c) { return c.holds(x, opt.tolerance); })) continue;
    const double val = partial_value(p, s, x, in_vars, with_constant, only_block);
    if (!found || val < best.value - opt.tolerance) {
      best = {x, val};
      found = true;
    }
  }
  if (!found) throw InvalidArgument("a scalarized block has no feasible nonnegative grid point");
  return best;
}

}  // namespace

ScalarizationResult scalarize_decompose(const ProblemDefinition& p, const SeparableSystem& s, const Options& opt) {
  const std::size_t all = p.subsystems.size();
  ScalarizationResult r;
  r.x.assign(p.dimension(), 0.0);
  const auto shared = minimize_block(p, s, s.shared, s.shared_constraints, false, all, opt);
  for (auto v : s.shared) r.x[v] = shared.x[v];
  r.shared_value = shared.value;
  r.total = shared.value;
  for (std::size_t i = 0; i < all; ++i) {
    const auto block = minimize_block(p, s, s.blocks[i], s.block_constraints[i], true, i, opt);
    for (auto v : s.blocks[i]) r.x[v] = block.x[v];
    r.block_values.push_back(block.value);
    r.total += block.value;
  }
  return r;
}

}  // namespace mocs
