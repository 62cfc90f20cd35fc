#include "mocs/model.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <set>
#include <unordered_set>

#include "mocs/errors.hpp"
#include "parallel.hpp"

namespace mocs {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::LessEqual: return "<=";
    case Relation::GreaterEqual: return ">=";
    case Relation::Equal: return "=";
    case Relation::Less: return "<";
    case Relation::Greater: return ">";
  }
  return "?";
}

std::optional<Relation> relation_from_string(std::string_view s) {
  if (s == "<=") return Relation::LessEqual;
  if (s == ">=") return Relation::GreaterEqual;
  if (s == "=") return Relation::Equal;
  if (s == "<") return Relation::Less;
  if (s == ">") return Relation::Greater;
  return std::nullopt;
}

double LinearFunction::evaluate(std::span<const double> x) const {
  double v = constant;
  for (const auto& t : terms) v += t.coeff * x[t.var];
  return v;
}

void LinearFunction::normalize() {
  std::ranges::sort(terms, {}, &Term::var);
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (const auto& t : terms) {
    if (!merged.empty() && merged.back().var == t.var) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  terms = std::move(merged);
}

bool Constraint::holds(std::span<const double> x, double tol) const {
  const double lhs = fn.evaluate(x);
  switch (relation) {
    case Relation::LessEqual: return lhs <= rhs + tol;
    case Relation::GreaterEqual: return lhs >= rhs - tol;
    case Relation::Equal: return std::abs(lhs - rhs) <= tol;
    case Relation::Less: return lhs < rhs - tol;
    case Relation::Greater: return lhs > rhs + tol;
  }
  return false;
}

double Variable::grid_value(std::size_t k) const {
  if (steps <= 1 || k == 0) return min;
  if (k + 1 == steps) return max;
  return min + static_cast<double>(k) * (max - min) / static_cast<double>(steps - 1);
}

std::size_t ProblemDefinition::objective_dimension() const {
  std::size_t p = 0;
  for (const auto& s : subsystems) p += s.objectives.size();
  return p;
}

std::size_t ProblemDefinition::objective_offset(std::size_t subsystem) const {
  std::size_t off = 0;
  for (std::size_t i = 0; i < subsystem; ++i) off += subsystems[i].objectives.size();
  return off;
}

std::optional<std::size_t> ProblemDefinition::find_variable(std::string_view name) const {
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> ProblemDefinition::find_subsystem(std::string_view name) const {
  for (std::size_t i = 0; i < subsystems.size(); ++i)
    if (subsystems[i].name == name) return i;
  return std::nullopt;
}

std::vector<std::size_t> subsystems_touching(const ProblemDefinition& p, const Constraint& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.subsystems.size(); ++i) {
    const auto& vars = p.subsystems[i].variables;
    const bool touches = std::ranges::any_of(c.fn.terms, [&](const Term& t) {
      return std::ranges::binary_search(vars, t.var);
    });
    if (touches) out.push_back(i);
  }
  return out;
}

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw ValidationError(msg);
}

bool strictly_ascending(const std::vector<std::size_t>& v) {
  return std::ranges::adjacent_find(v, std::greater_equal<>{}) == v.end();
}

void check_function_vars(const ProblemDefinition& p, const LinearFunction& fn,
                         const std::vector<std::size_t>& allowed, const std::string& where) {
  for (const auto& t : fn.terms) {
    require(t.var < p.variables.size(), where + ": variable index out of range");
    require(std::isfinite(t.coeff), where + ": non-finite coefficient");
    require(std::ranges::binary_search(allowed, t.var),
            where + ": variable '" + p.variables[t.var].name + "' is not visible here");
  }
  require(std::isfinite(fn.constant), where + ": non-finite constant");
}

}  // namespace

void validate(const ProblemDefinition& p) {
  std::unordered_set<std::string> names;
  for (const auto& v : p.variables) {
    require(!v.name.empty(), "variable with empty name");
    require(names.insert(v.name).second, "duplicate variable name '" + v.name + "'");
    require(std::isfinite(v.min) && std::isfinite(v.max), "variable '" + v.name + "': non-finite bound");
    require(v.min <= v.max, "variable '" + v.name + "': min > max");
    require(v.steps >= 1, "variable '" + v.name + "': steps must be >= 1");
    require(v.steps > 1 || v.min == v.max, "variable '" + v.name + "': steps = 1 requires min = max");
  }

  require(!p.subsystems.empty(), "problem has no subsystems");
  names.clear();
  std::vector<char> seen(p.variables.size(), 0);
  for (const auto& s : p.subsystems) {
    const std::string where = "subsystem '" + s.name + "'";
    require(!s.name.empty(), "subsystem with empty name");
    require(names.insert(s.name).second, "duplicate subsystem name '" + s.name + "'");
    require(!s.variables.empty(), where + ": no variables");
    require(strictly_ascending(s.variables), where + ": variable list not sorted/unique");
    for (auto v : s.variables) {
      require(v < p.variables.size(), where + ": variable index out of range");
      seen[v] = 1;
    }
    require(!s.objectives.empty(), where + ": needs at least one objective");
    for (const auto& f : s.objectives) check_function_vars(p, f.fn, s.variables, where + " objective '" + f.name + "'");
    for (const auto& c : s.constraints) {
      check_function_vars(p, c.fn, s.variables, where + " constraint '" + c.name + "'");
      require(std::isfinite(c.rhs), where + " constraint '" + c.name + "': non-finite rhs");
    }
  }
  for (std::size_t k = 0; k < p.variables.size(); ++k)
    require(seen[k] != 0, "variable '" + p.variables[k].name + "' is not used by any subsystem");

  names.clear();
  for (const auto& l : p.linking) {
    const auto& c = l.constraint;
    const std::string where = "linking constraint '" + c.name + "'";
    require(!c.name.empty(), "linking constraint with empty name");
    require(names.insert(c.name).second, "duplicate linking constraint name '" + c.name + "'");
    require(std::isfinite(c.rhs), where + ": non-finite rhs");
    require(strictly_ascending(l.subsystems), where + ": subsystem list not sorted/unique");
    for (auto s : l.subsystems) require(s < p.subsystems.size(), where + ": subsystem index out of range");
    require(l.subsystems.size() >= 2, where + ": must relate at least two subsystems");

    std::vector<std::size_t> visible;
    for (auto s : l.subsystems) {
      const auto& sv = p.subsystems[s].variables;
      visible.insert(visible.end(), sv.begin(), sv.end());
    }
    std::ranges::sort(visible);
    check_function_vars(p, c.fn, visible, where);

    const auto touching = subsystems_touching(p, c);
    if (l.explicit_subsystems) {
      for (auto s : l.subsystems)
        require(std::ranges::binary_search(touching, s),
                where + ": subsystem '" + p.subsystems[s].name + "' sees none of its variables");
    } else {
      require(touching == l.subsystems, where + ": subsystem list disagrees with its variables");
    }
  }
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> ComplexSystemGraph::subsystems_of_variable(std::size_t var) const {
  std::vector<std::size_t> out;
  for (const auto& [v, s] : var_to_sub_arcs)
    if (v == var) out.push_back(s);
  return out;
}

std::vector<std::size_t> ComplexSystemGraph::variables_of_subsystem(std::size_t sub) const {
  std::vector<std::size_t> out;
  for (const auto& [v, s] : var_to_sub_arcs)
    if (s == sub) out.push_back(v);
  return out;
}

std::vector<std::size_t> ComplexSystemGraph::subsystems_of_linking(std::size_t link) const {
  std::vector<std::size_t> out;
  for (const auto& [s, l] : sub_to_link_arcs)
    if (l == link) out.push_back(s);
  return out;
}

std::vector<std::size_t> ComplexSystemGraph::variables_of_linking(std::size_t link) const {
  std::set<std::size_t> vars;
  for (auto s : subsystems_of_linking(link))
    for (auto v : variables_of_subsystem(s)) vars.insert(v);
  return {vars.begin(), vars.end()};
}

ComplexSystemGraph build_graph(const ProblemDefinition& p) {
  ComplexSystemGraph g;
  for (const auto& v : p.variables) g.variable_nodes.push_back(v.name);
  for (const auto& s : p.subsystems) g.subsystem_nodes.push_back(s.name);
  for (const auto& l : p.linking) g.linking_nodes.push_back(l.constraint.name);
  for (std::size_t i = 0; i < p.subsystems.size(); ++i)
    for (auto v : p.subsystems[i].variables) g.var_to_sub_arcs.emplace_back(v, i);
  for (std::size_t j = 0; j < p.linking.size(); ++j)
    for (auto s : p.linking[j].subsystems) g.sub_to_link_arcs.emplace_back(s, j);
  std::ranges::sort(g.var_to_sub_arcs);
  std::ranges::sort(g.sub_to_link_arcs);
  return g;
}

void validate(const ComplexSystemGraph& g) {
  const auto unique_sorted = [](const auto& arcs) {
    return std::ranges::adjacent_find(arcs, std::greater_equal<>{}) == arcs.end();
  };
  require(unique_sorted(g.var_to_sub_arcs), "duplicate or unsorted variable-subsystem arcs");
  require(unique_sorted(g.sub_to_link_arcs), "duplicate or unsorted subsystem-linking arcs");
  std::vector<std::size_t> sub_in(g.subsystem_nodes.size(), 0);
  std::vector<std::size_t> link_in(g.linking_nodes.size(), 0);
  for (const auto& [v, s] : g.var_to_sub_arcs) {
    require(v < g.variable_nodes.size() && s < g.subsystem_nodes.size(), "arc index out of range");
    ++sub_in[s];
  }
  for (const auto& [s, l] : g.sub_to_link_arcs) {
    require(s < g.subsystem_nodes.size() && l < g.linking_nodes.size(), "arc index out of range");
    ++link_in[l];
  }
  for (std::size_t s = 0; s < sub_in.size(); ++s)
    require(sub_in[s] >= 1, "subsystem node '" + g.subsystem_nodes[s] + "' has no variable");
  for (std::size_t l = 0; l < link_in.size(); ++l)
    require(link_in[l] >= 2, "linking node '" + g.linking_nodes[l] + "' has fewer than two subsystems");
}

std::vector<double> extract_subvector(std::span<const double> x, std::span<const std::size_t> nodes) {
  std::vector<std::size_t> idx(nodes.begin(), nodes.end());
  std::ranges::sort(idx);
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<double> out;
  out.reserve(idx.size());
  for (auto k : idx) {
    if (k >= x.size()) throw InvalidArgument("extract_subvector: index " + std::to_string(k) + " out of range");
    out.push_back(x[k]);
  }
  return out;
}

std::vector<VariableKind> classify_variables(const ComplexSystemGraph& g) {
  std::vector<std::size_t> degree(g.variable_nodes.size(), 0);
  for (const auto& arc : g.var_to_sub_arcs) ++degree[arc.first];
  std::vector<VariableKind> out;
  out.reserve(degree.size());
  for (std::size_t k = 0; k < degree.size(); ++k) {
    if (degree[k] == 0) throw ValidationError("orphan variable '" + g.variable_nodes[k] + "'");
    out.push_back(degree[k] == 1 ? VariableKind::Local : VariableKind::Global);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
  std::ranges::sort(v);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::size_t> iota_vec(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

Scope Scope::make(std::vector<std::size_t> f, std::vector<std::size_t> s, std::vector<std::size_t> c) {
  return Scope{sorted_unique(std::move(f)), sorted_unique(std::move(s)), sorted_unique(std::move(c))};
}

Scope Scope::system(const ProblemDefinition& p, std::vector<std::size_t> f) {
  return make(std::move(f), all_subsystems(p), all_linking(p));
}

Scope Scope::full(const ProblemDefinition& p) {
  return make(all_subsystems(p), all_subsystems(p), all_linking(p));
}

void Scope::check(const ProblemDefinition& p) const {
  for (auto i : objectives)
    if (i >= p.subsystems.size()) throw InvalidArgument("objective scope index out of range");
  for (auto i : subsystems)
    if (i >= p.subsystems.size()) throw InvalidArgument("subsystem scope index out of range");
  for (auto j : linking)
    if (j >= p.linking.size()) throw InvalidArgument("linking scope index out of range");
}

std::vector<std::size_t> all_subsystems(const ProblemDefinition& p) { return iota_vec(p.subsystems.size()); }
std::vector<std::size_t> all_linking(const ProblemDefinition& p) { return iota_vec(p.linking.size()); }

int compare_points(std::span<const double> a, std::span<const double> b, double tol) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] < b[k] - tol) return -1;
    if (a[k] > b[k] + tol) return 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

bool points_equal(std::span<const double> a, std::span<const double> b, double tol) {
  return compare_points(a, b, tol) == 0;
}

PointSet PointSet::from_points(std::size_t dimension, std::vector<Point> points, double tol) {
  for (const auto& x : points)
    if (x.size() != dimension) throw InvalidArgument("point dimension mismatch");
  std::ranges::sort(points, [](const Point& a, const Point& b) {
    return std::ranges::lexicographical_compare(a, b);
  });
  PointSet out(dimension);
  out.points_.reserve(points.size());
  for (auto& x : points) {
    bool duplicate = false;
    // Only points whose leading coordinate lies within tol can be equal.
    for (auto it = out.points_.rbegin(); it != out.points_.rend(); ++it) {
      if (dimension > 0 && (*it)[0] < x[0] - tol) break;
      if (points_equal(*it, x, tol)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) out.points_.push_back(std::move(x));
  }
  return out;
}

PointSet PointSet::from_canonical(std::size_t dimension, std::vector<Point> points) {
  PointSet out(dimension);
  out.points_ = std::move(points);
#ifndef NDEBUG
  for (std::size_t i = 0; i < out.points_.size(); ++i) {
    assert(out.points_[i].size() == dimension);
    if (i > 0) assert(std::ranges::lexicographical_compare(out.points_[i - 1], out.points_[i]));
  }
#endif
  return out;
}

bool PointSet::contains(std::span<const double> x, double tol) const {
  if (x.size() != dimension_) return false;
  if (dimension_ == 0) return !points_.empty();
  auto it = std::ranges::lower_bound(points_, x[0] - tol, {}, [](const Point& q) { return q[0]; });
  for (; it != points_.end() && (*it)[0] <= x[0] + tol; ++it)
    if (points_equal(*it, x, tol)) return true;
  return false;
}

bool PointSet::is_subset_of(const PointSet& other, double tol) const {
  if (empty()) return true;
  if (dimension_ != other.dimension_) return false;
  return std::ranges::all_of(points_, [&](const Point& x) { return other.contains(x, tol); });
}

bool PointSet::same_as(const PointSet& other, double tol) const {
  return size() == other.size() && is_subset_of(other, tol) && other.is_subset_of(*this, tol);
}

PointSet PointSet::select(const std::vector<char>& keep) const {
  PointSet out(dimension_);
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (keep[i] != 0) out.points_.push_back(points_[i]);
  return out;
}

PointSet set_intersection(const PointSet& a, const PointSet& b, double tol) {
  std::vector<char> keep(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) keep[i] = b.contains(a[i], tol) ? 1 : 0;
  return a.select(keep);
}

PointSet candidate_grid(const ProblemDefinition& p, const Options& opt) {
  const std::size_t n = p.variables.size();
  std::size_t total = 1;
  for (const auto& v : p.variables) {
    if (v.steps == 0) throw ValidationError("variable '" + v.name + "' has zero steps");
    if (total > opt.grid_cap / v.steps) {
      throw CapExceeded("candidate grid exceeds cap of " + std::to_string(opt.grid_cap) + " points");
    }
    total *= v.steps;
  }
  if (total > opt.grid_cap)
    throw CapExceeded("candidate grid exceeds cap of " + std::to_string(opt.grid_cap) + " points");

  std::vector<Point> pts;
  pts.reserve(total);
  std::vector<std::size_t> k(n, 0);
  for (std::size_t count = 0; count < total; ++count) {
    Point x(n);
    for (std::size_t d = 0; d < n; ++d) x[d] = p.variables[d].grid_value(k[d]);
    pts.push_back(std::move(x));
    for (std::size_t d = n; d-- > 0;) {
      if (++k[d] < p.variables[d].steps) break;
      k[d] = 0;
    }
  }
  return PointSet::from_canonical(n, std::move(pts));
}

bool is_valid(const ProblemDefinition& p, std::span<const double> x, std::span<const std::size_t> subsystems,
              std::span<const std::size_t> linking, double tol) {
  for (auto i : subsystems)
    for (const auto& c : p.subsystems[i].constraints)
      if (!c.holds(x, tol)) return false;
  for (auto j : linking)
    if (!p.linking[j].constraint.holds(x, tol)) return false;
  return true;
}

PointSet filter_valid(const ProblemDefinition& p, const PointSet& candidates,
                      std::span<const std::size_t> subsystems, std::span<const std::size_t> linking,
                      const Options& opt) {
  for (auto i : subsystems)
    if (i >= p.subsystems.size()) throw InvalidArgument("subsystem index out of range");
  for (auto j : linking)
    if (j >= p.linking.size()) throw InvalidArgument("linking index out of range");
  if (subsystems.empty() && linking.empty()) return candidates;
  std::vector<char> keep(candidates.size(), 0);
  detail::parallel_for(candidates.size(), opt.threads, [&](std::size_t i) {
    keep[i] = is_valid(p, candidates[i], subsystems, linking, opt.tolerance) ? 1 : 0;
  });
  return candidates.select(keep);
}

}  // namespace mocs
