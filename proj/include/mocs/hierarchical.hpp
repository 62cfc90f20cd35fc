#ifndef MOCS_HIERARCHICAL_HPP
#define MOCS_HIERARCHICAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "mocs/model.hpp"

namespace mocs {

inline constexpr double kDefaultBigM = 1024.0;
inline constexpr double kDefaultDelta = 1e-3;

struct HierarchicalConfig {
  std::vector<std::size_t> order;  ///< permutation of subsystem indices; empty means file order
  double eps = 0.0;
  double delta = kDefaultDelta;
  double big_M = kDefaultBigM;
};

struct StageRecord {
  std::size_t subsystem = 0;
  std::size_t count_in = 0;   ///< points entering the dominance filter
  std::size_t count_out = 0;
  std::vector<std::size_t> linking;  ///< linking constraints enforced at this stage
};

struct ProbeRecord {
  double eps = 0.0;
  double lb = 0.0;  ///< bracket after the probe
  double ub = 0.0;
  bool success = false;
  std::vector<StageRecord> stages;
};

struct HierarchicalResult {
  PointSet points;
  std::vector<StageRecord> stages;  ///< stages of the returned pass
  std::vector<ProbeRecord> probes;  ///< adaptive variant only
  std::optional<double> eps_star;   ///< adaptive variant only
  std::vector<std::string> warnings;
};

/// C_i for the subsystem at zero-based position `pos` of `order`: linking
/// constraints adjacent to it and to some subsystem earlier in the order.
/// Position 0 yields the empty set. Throws InvalidArgument if pos is out of
/// range or order is not a permutation.
[[nodiscard]] std::vector<std::size_t> linking_scope(const ProblemDefinition& p, const std::vector<std::size_t>& order,
                                                     std::size_t pos);

/// Stage 1 keeps the system valid candidates superior for the first
/// subsystem; each later stage keeps the points of the previous stage that
/// are superior for the next subsystem.
[[nodiscard]] HierarchicalResult hierarchical_full(const ProblemDefinition& p, const PointSet& candidates,
                                                   const HierarchicalConfig& config, const Options& opt = {});

/// Stage i filters the previous stage by subsystem i's feasibility and by
/// C_i consistency, then keeps the points superior for subsystem i. Stage 1
/// starts from the candidates feasible for the first subsystem. May return ∅.
[[nodiscard]] HierarchicalResult hierarchical_incremental(const ProblemDefinition& p, const PointSet& candidates,
                                                          const HierarchicalConfig& config, const Options& opt = {});

/// As hierarchical_incremental, but every stage except the last keeps the
/// config.eps-superior points.
[[nodiscard]] HierarchicalResult hierarchical_eps(const ProblemDefinition& p, const PointSet& candidates,
                                                  const HierarchicalConfig& config, const Options& opt = {});

/// Bisection on eps in [0, big_M]: probe eps_1 = 0, then midpoints. A probe
/// succeeds when every stage, the last included, is nonempty under
/// eps-superiority; success lowers ub, failure raises lb. Stops once
/// ub - lb <= delta and returns eps* = ub with the last successful set, or
/// eps* = big_M and ∅ if no probe succeeded.
[[nodiscard]] HierarchicalResult hierarchical_eps_adaptive(const ProblemDefinition& p, const PointSet& candidates,
                                                           const HierarchicalConfig& config, const Options& opt = {});

}  // namespace mocs

#endif  // MOCS_HIERARCHICAL_HPP
