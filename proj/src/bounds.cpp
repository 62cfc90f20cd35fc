#include "mocs/bounds.hpp"

#include <algorithm>
#include <limits>

#include "mocs/dominance.hpp"
#include "mocs/errors.hpp"

namespace mocs {

namespace {

std::vector<double> block_minimum(const ProblemDefinition& p, std::size_t i, const PointSet& valid) {
  std::vector<double> best(p.subsystems[i].objectives.size(), std::numeric_limits<double>::infinity());
  for (const auto& x : valid) {
    const auto f = objective_value(p, i, x);
    for (std::size_t k = 0; k < f.size(); ++k) best[k] = std::min(best[k], f[k]);
  }
  return best;
}

void check_index(const ProblemDefinition& p, std::size_t i) {
  if (i >= p.subsystems.size()) throw InvalidArgument("subsystem index out of range");
}

std::vector<Point> image(const ProblemDefinition& p, std::size_t i, const PointSet& s, double tol) {
  std::vector<Point> out;
  for (const auto& x : s) out.push_back(objective_value(p, i, x));
  return PointSet::from_points(p.subsystems[i].objectives.size(), std::move(out), tol).points();
}

}  // namespace

std::vector<double> subsystem_ideal_point(const ProblemDefinition& p, std::size_t i, const PointSet& candidates,
                                          const Options& opt) {
  check_index(p, i);
  const std::vector<std::size_t> s{i};
  const auto valid = filter_valid(p, candidates, s, {}, opt);
  if (valid.empty())
    throw InvalidArgument("no candidate is feasible for subsystem '" + p.subsystems[i].name + "'");
  return block_minimum(p, i, valid);
}

std::vector<double> system_ideal_point(const ProblemDefinition& p, std::size_t i, const PointSet& candidates,
                                       const Options& opt) {
  check_index(p, i);
  const auto valid = filter_valid(p, candidates, all_subsystems(p), all_linking(p), opt);
  if (valid.empty()) throw InvalidArgument("no candidate is system valid");
  return block_minimum(p, i, valid);
}

std::vector<double> aio_ideal_point(const ProblemDefinition& p, const PointSet& candidates, const Options& opt) {
  const auto valid = filter_valid(p, candidates, all_subsystems(p), all_linking(p), opt);
  if (valid.empty()) throw InvalidArgument("no candidate is system valid");
  std::vector<double> best(p.objective_dimension(), std::numeric_limits<double>::infinity());
  for (const auto& x : valid) {
    const auto f = aio_objective(p, x);
    for (std::size_t k = 0; k < f.size(); ++k) best[k] = std::min(best[k], f[k]);
  }
  return best;
}

IdealSets ideal_sets(const ProblemDefinition& p, std::size_t i, const PointSet& candidates, const Options& opt) {
  check_index(p, i);
  IdealSets r;
  const auto local = superior_set(p, Scope::make({i}, {i}, {}), candidates, SuperiorKind::Plain, opt);
  const auto system = superior_set(p, Scope::system(p, {i}), candidates, SuperiorKind::Plain, opt);
  r.subsystem_level = image(p, i, local, opt.tolerance);
  r.system_level = image(p, i, system, opt.tolerance);
  return r;
}

std::vector<Point> ideal_set_product(const std::vector<std::vector<Point>>& per_subsystem) {
  std::size_t total = 1;
  for (const auto& s : per_subsystem) {
    if (s.empty()) return {};
    if (total > kIdealProductCap / s.size()) throw CapExceeded("ideal set product exceeds the tuple cap");
    total *= s.size();
  }
  std::vector<Point> out;
  out.reserve(total);
  std::vector<std::size_t> idx(per_subsystem.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    Point y;
    for (std::size_t b = 0; b < per_subsystem.size(); ++b) {
      const auto& part = per_subsystem[b][idx[b]];
      y.insert(y.end(), part.begin(), part.end());
    }
    out.push_back(std::move(y));
    for (std::size_t b = per_subsystem.size(); b-- > 0;) {
      if (++idx[b] < per_subsystem[b].size()) break;
      idx[b] = 0;
    }
  }
  return out;
}

IdealBounds compute_ideal_bounds(const ProblemDefinition& p, const PointSet& candidates, const Options& opt) {
  IdealBounds b;
  for (std::size_t i = 0; i < p.subsystems.size(); ++i) {
    b.per_subsystem_ss.push_back(subsystem_ideal_point(p, i, candidates, opt));
    b.per_subsystem_s.push_back(system_ideal_point(p, i, candidates, opt));
    b.y_ssI.insert(b.y_ssI.end(), b.per_subsystem_ss.back().begin(), b.per_subsystem_ss.back().end());
    b.y_sI.insert(b.y_sI.end(), b.per_subsystem_s.back().begin(), b.per_subsystem_s.back().end());
  }
  return b;
}

}  // namespace mocs
