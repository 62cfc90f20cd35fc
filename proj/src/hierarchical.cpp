#include "mocs/hierarchical.hpp"

#include <algorithm>
#include <numeric>

#include "mocs/dominance.hpp"
#include "mocs/errors.hpp"

namespace mocs {

namespace {

std::vector<std::size_t> resolve_order(const ProblemDefinition& p, const std::vector<std::size_t>& order) {
  const std::size_t m = p.subsystems.size();
  if (order.empty()) {
    std::vector<std::size_t> o(m);
    std::iota(o.begin(), o.end(), 0);
    return o;
  }
  if (order.size() != m) throw InvalidArgument("order must list every subsystem exactly once");
  std::vector<char> seen(m, 0);
  for (auto i : order) {
    if (i >= m || seen[i]) throw InvalidArgument("order must be a permutation of the subsystems");
    seen[i] = 1;
  }
  return order;
}

void warn_if_negative(const ProblemDefinition& p, const PointSet& pts, double eps, const Options& opt,
                      std::vector<std::string>& warnings) {
  if (eps <= 0.0) return;
  if (has_negative_objective(p, all_subsystems(p), pts, opt.tolerance))
    warnings.emplace_back("negative objective values: (1+eps) scaling loosens dominance for them");
}

enum class LastStage { Plain, Eps };

// Stages shared by the incremental and eps variants.
HierarchicalResult staged_filter(const ProblemDefinition& p, const PointSet& candidates,
                                 const std::vector<std::size_t>& order, double eps, LastStage last,
                                 const Options& opt) {
  HierarchicalResult r;
  PointSet current = candidates;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const std::size_t i = order[pos];
    const std::vector<std::size_t> s{i};
    StageRecord rec;
    rec.subsystem = i;
    rec.linking = linking_scope(p, order, pos);
    const auto admissible = filter_valid(p, current, s, rec.linking, opt);
    rec.count_in = admissible.size();
    const bool is_last = pos + 1 == order.size();
    const bool use_eps = !is_last || last == LastStage::Eps;
    current = use_eps ? eps_superior_within(p, s, admissible, eps, opt)
                      : superior_within(p, s, admissible, SuperiorKind::Plain, opt);
    rec.count_out = current.size();
    r.stages.push_back(std::move(rec));
  }
  r.points = std::move(current);
  return r;
}

}  // namespace

std::vector<std::size_t> linking_scope(const ProblemDefinition& p, const std::vector<std::size_t>& order,
                                       std::size_t pos) {
  const auto o = resolve_order(p, order);
  if (pos >= o.size()) throw InvalidArgument("stage position out of range");
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < p.linking.size(); ++j) {
    const auto& subs = p.linking[j].subsystems;
    if (!std::ranges::binary_search(subs, o[pos])) continue;
    for (std::size_t k = 0; k < pos; ++k) {
      if (std::ranges::binary_search(subs, o[k])) {
        out.push_back(j);
        break;
      }
    }
  }
  return out;
}

HierarchicalResult hierarchical_full(const ProblemDefinition& p, const PointSet& candidates,
                                     const HierarchicalConfig& config, const Options& opt) {
  const auto order = resolve_order(p, config.order);
  HierarchicalResult r;
  PointSet current = filter_valid(p, candidates, all_subsystems(p), all_linking(p), opt);
  for (auto i : order) {
    const std::vector<std::size_t> f{i};
    StageRecord rec;
    rec.subsystem = i;
    rec.count_in = current.size();
    current = superior_within(p, f, current, SuperiorKind::Plain, opt);
    rec.count_out = current.size();
    r.stages.push_back(std::move(rec));
  }
  if (!r.stages.empty()) r.stages.front().linking = all_linking(p);
  r.points = std::move(current);
  return r;
}

HierarchicalResult hierarchical_incremental(const ProblemDefinition& p, const PointSet& candidates,
                                            const HierarchicalConfig& config, const Options& opt) {
  return staged_filter(p, candidates, resolve_order(p, config.order), 0.0, LastStage::Plain, opt);
}

HierarchicalResult hierarchical_eps(const ProblemDefinition& p, const PointSet& candidates,
                                    const HierarchicalConfig& config, const Options& opt) {
  if (!(config.eps >= 0.0)) throw InvalidArgument("eps must be >= 0");
  auto r = staged_filter(p, candidates, resolve_order(p, config.order), config.eps, LastStage::Plain, opt);
  warn_if_negative(p, candidates, config.eps, opt, r.warnings);
  return r;
}

HierarchicalResult hierarchical_eps_adaptive(const ProblemDefinition& p, const PointSet& candidates,
                                             const HierarchicalConfig& config, const Options& opt) {
  if (!(config.delta > 0.0) || !(config.big_M > config.delta))
    throw InvalidArgument("adaptive eps requires 0 < delta < big_M");
  const auto order = resolve_order(p, config.order);
  HierarchicalResult r;
  r.points = PointSet(p.dimension());
  double lb = 0.0;
  double ub = config.big_M;
  double eps = 0.0;
  bool warned = false;
  while (ub - lb > config.delta) {
    auto pass = staged_filter(p, candidates, order, eps, LastStage::Eps, opt);
    ProbeRecord probe;
    probe.eps = eps;
    probe.success = !pass.points.empty();
    if (probe.success) {
      ub = eps;
      r.points = std::move(pass.points);
      r.stages = pass.stages;
    } else {
      lb = eps;
    }
    probe.lb = lb;
    probe.ub = ub;
    probe.stages = std::move(pass.stages);
    r.probes.push_back(std::move(probe));
    if (!warned && eps > 0.0) {
      warn_if_negative(p, candidates, eps, opt, r.warnings);
      warned = true;
    }
    eps = (lb + ub) / 2.0;
  }
  r.eps_star = ub;
  return r;
}

}  // namespace mocs
