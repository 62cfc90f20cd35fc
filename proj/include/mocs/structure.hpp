#ifndef MOCS_STRUCTURE_HPP
#define MOCS_STRUCTURE_HPP

#include <vector>

#include "mocs/dominance.hpp"
#include "mocs/model.hpp"

namespace mocs {

struct IndependenceReport {
  /// Connected subsystem groups after inlining linking constraints, each
  /// ascending, ordered by their smallest member.
  std::vector<std::vector<std::size_t>> components;
  /// No linking constraints and no global variables.
  bool independent = false;
};

[[nodiscard]] IndependenceReport detect_independence(const ProblemDefinition& p);

/// Every grid point over `vars` only, embedded in the full dimension with the
/// remaining coordinates at zero. Lexicographic order. Throws CapExceeded.
[[nodiscard]] PointSet subgrid(const ProblemDefinition& p, std::span<const std::size_t> vars,
                               const Options& opt = {});

/// Sup(i, i, ∅) (or its weak/strict variant) projected onto subsystem i's
/// variables, computed on that subsystem's own grid.
[[nodiscard]] PointSet block_superior_set(const ProblemDefinition& p, std::size_t i, SuperiorKind kind,
                                          const Options& opt = {});

/// Cartesian product of per-block sets (each over the block's own variables,
/// in ascending variable order), lifted to full points. Requires an
/// independent problem. Throws CapExceeded past opt.grid_cap points.
[[nodiscard]] PointSet compose_block_diagonal(const ProblemDefinition& p, const std::vector<PointSet>& per_block_sets,
                                              const Options& opt = {});

/// Additively separable view of a problem: shared variables x_0 (the global
/// ones) and per-subsystem local variables x_i. Linear objectives split into
/// g_i(x_i) + g_0i(x_0) automatically.
struct SeparableSystem {
  std::vector<std::size_t> shared;               ///< x_0
  std::vector<std::vector<std::size_t>> blocks;  ///< x_i per subsystem
  std::vector<Constraint> shared_constraints;    ///< A_0 x_0 <= b_0
  std::vector<std::vector<Constraint>> block_constraints;
  std::vector<std::vector<double>> weights;      ///< w_i, length p_i
};

/// Throws ValidationError if the problem has linking constraints or a local
/// constraint mixing shared and local variables; InvalidArgument on bad
/// weights (negative, wrong length, or all zero).
[[nodiscard]] SeparableSystem make_separable(const ProblemDefinition& p, std::vector<std::vector<double>> weights);

struct ScalarizationResult {
  Point x;
  double shared_value = 0.0;               ///< optimum of (S_0)
  std::vector<double> block_values;        ///< optimum of each (S_i)
  double total = 0.0;                      ///< sum of the above
};

/// Solves (S_0) and every (S_i) by exhaustive grid scan over nonnegative grid
/// values, breaking ties towards the lexicographically smallest point.
[[nodiscard]] ScalarizationResult scalarize_decompose(const ProblemDefinition& p, const SeparableSystem& s,
                                                      const Options& opt = {});

/// sum_i w_i^T f_i(x).
[[nodiscard]] double weighted_sum(const ProblemDefinition& p, const std::vector<std::vector<double>>& weights,
                                  std::span<const double> x);

}  // namespace mocs

#endif  // MOCS_STRUCTURE_HPP
