#include "mocs/transform.hpp"

#include <algorithm>

#include "mocs/errors.hpp"

namespace mocs {

ProblemDefinition inline_linking(const ProblemDefinition& p) {
  ProblemDefinition out = p;
  out.linking.clear();
  for (const auto& l : p.linking) {
    for (auto s : l.subsystems) {
      auto& sub = out.subsystems[s];
      sub.constraints.push_back(l.constraint);
      for (const auto& t : l.constraint.fn.terms) sub.variables.push_back(t.var);
      std::ranges::sort(sub.variables);
      sub.variables.erase(std::unique(sub.variables.begin(), sub.variables.end()), sub.variables.end());
    }
  }
  return out;
}

namespace {

LinearFunction remap(const LinearFunction& fn, const std::vector<std::size_t>& index_in_sub) {
  LinearFunction out = fn;
  for (auto& t : out.terms) t.var = index_in_sub[t.var];
  out.normalize();
  return out;
}

}  // namespace

StandardFormResult to_standard_form(const ProblemDefinition& p) {
  const ProblemDefinition inl = inline_linking(p);
  const std::size_t n = inl.variables.size();
  const std::size_t m = inl.subsystems.size();

  std::vector<std::vector<std::size_t>> users(n);
  for (std::size_t s = 0; s < m; ++s)
    for (auto v : inl.subsystems[s].variables) users[v].push_back(s);

  StandardFormResult r;
  r.copy_map.resize(n);
  // new_index[s][v]: standard-form index of v as seen by subsystem s.
  std::vector<std::vector<std::size_t>> new_index(m, std::vector<std::size_t>(n, 0));
  for (std::size_t v = 0; v < n; ++v) {
    if (users[v].empty()) throw ValidationError("variable '" + inl.variables[v].name + "' is not used");
    for (auto s : users[v]) {
      Variable copy = inl.variables[v];
      if (users[v].size() > 1) copy.name += "#" + inl.subsystems[s].name;
      const std::size_t idx = r.problem.variables.size();
      r.problem.variables.push_back(std::move(copy));
      r.copy_map[v].push_back({s, idx});
      new_index[s][v] = idx;
    }
  }

  for (std::size_t s = 0; s < m; ++s) {
    const auto& src = inl.subsystems[s];
    Subsystem sub;
    sub.name = src.name;
    for (auto v : src.variables) sub.variables.push_back(new_index[s][v]);
    std::ranges::sort(sub.variables);
    for (const auto& f : src.objectives) sub.objectives.push_back({f.name, remap(f.fn, new_index[s])});
    for (const auto& c : src.constraints) {
      Constraint nc = c;
      nc.fn = remap(c.fn, new_index[s]);
      sub.constraints.push_back(std::move(nc));
    }
    r.problem.subsystems.push_back(std::move(sub));
  }

  const std::size_t cols = r.problem.variables.size();
  for (std::size_t v = 0; v < n; ++v) {
    const auto& copies = r.copy_map[v];
    for (std::size_t k = 0; k + 1 < copies.size(); ++k) {
      const auto a = copies[k];
      const auto b = copies[k + 1];
      LinkingConstraint l;
      l.constraint.name = r.problem.variables[a.variable].name + "=" + r.problem.variables[b.variable].name;
      l.constraint.fn.terms = {{a.variable, 1.0}, {b.variable, -1.0}};
      l.constraint.fn.normalize();
      l.constraint.relation = Relation::Equal;
      l.constraint.rhs = 0.0;
      l.subsystems = {a.subsystem, b.subsystem};
      r.problem.linking.push_back(std::move(l));
      std::vector<int> row(cols, 0);
      row[a.variable] = 1;
      row[b.variable] = -1;
      r.incidence_matrix.push_back(std::move(row));
    }
  }
  return r;
}

Point lift_point(const StandardFormResult& sf, std::span<const double> x) {
  if (x.size() != sf.copy_map.size()) throw InvalidArgument("point dimension mismatch");
  Point y(sf.problem.variables.size(), 0.0);
  for (std::size_t v = 0; v < x.size(); ++v)
    for (const auto& c : sf.copy_map[v]) y[c.variable] = x[v];
  return y;
}

Point project_point(const StandardFormResult& sf, std::span<const double> y) {
  if (y.size() != sf.problem.variables.size()) throw InvalidArgument("point dimension mismatch");
  Point x(sf.copy_map.size(), 0.0);
  for (std::size_t v = 0; v < x.size(); ++v) x[v] = y[sf.copy_map[v].front().variable];
  return x;
}

}  // namespace mocs
