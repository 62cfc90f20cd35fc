/**
 * @file dominance.hpp
 * @brief System dominance, (weak/strict) superiority, epsilon-superiority and
 * classical AiO efficiency over finite candidate sets.
 *
 * Objective blocks are compared componentwise with tolerance: a <= b means
 * a <= b + tol and a component is strictly better when a < b - tol.
 */

#ifndef MOCS_DOMINANCE_HPP
#define MOCS_DOMINANCE_HPP

#include <span>
#include <vector>

#include "mocs/model.hpp"

namespace mocs {

enum class SuperiorKind { Weak, Plain, Strict };

/// Strongest relation that holds between two points for a fixed scope.
enum class DominanceVerdict { StrictlyDominates, Dominates, WeaklyDominates, None };

[[nodiscard]] std::string_view to_string(SuperiorKind k);
[[nodiscard]] std::string_view to_string(DominanceVerdict v);

/// f_i(x) evaluated on the subsystem's subvector.
[[nodiscard]] std::vector<double> objective_value(const ProblemDefinition& p, std::size_t subsystem,
                                                  std::span<const double> x);
/// Concatenation of every subsystem objective block, in subsystem order.
[[nodiscard]] std::vector<double> aio_objective(const ProblemDefinition& p, std::span<const double> x);

/// Does xbar dominate x over the objective blocks of scope.objectives?
///  - Strict: every block is <= with at least one strictly better component.
///  - Plain:  every block is componentwise <=, and some block has a strictly
///            better component.
///  - Weak:   every block is componentwise <=.
/// Both points are expected to be (S, C)-valid; debug builds assert it.
[[nodiscard]] bool system_dominates(const ProblemDefinition& p, const Scope& scope,
                                    std::span<const double> xbar, std::span<const double> x,
                                    SuperiorKind kind, double tol = kDefaultTolerance);

[[nodiscard]] DominanceVerdict system_dominance(const ProblemDefinition& p, const Scope& scope,
                                                std::span<const double> xbar, std::span<const double> x,
                                                double tol = kDefaultTolerance);

/// wSup / Sup / sSup(F, S, C) over candidates ∩ X_{S,C}.
///  - Weak:   no valid point strictly system-dominates x.
///  - Plain:  no valid point system-dominates x.
///  - Strict: no other valid point weakly system-dominates x.
[[nodiscard]] PointSet superior_set(const ProblemDefinition& p, const Scope& scope, const PointSet& candidates,
                                    SuperiorKind kind, const Options& opt = {});

/// Points of candidates ∩ X_{S,C} not eps-dominated: no valid xbar with
/// (1+eps) f(xbar) system-dominating f(x) (plain relation). eps = 0 gives Sup.
[[nodiscard]] PointSet eps_superior_set(const ProblemDefinition& p, const Scope& scope, const PointSet& candidates,
                                        double eps, const Options& opt = {});

/// Superior points of `points` w.r.t. the blocks in `objectives`, treating
/// `points` itself as the valid set (no constraint filtering).
[[nodiscard]] PointSet superior_within(const ProblemDefinition& p, std::span<const std::size_t> objectives,
                                       const PointSet& points, SuperiorKind kind, const Options& opt = {});
[[nodiscard]] PointSet eps_superior_within(const ProblemDefinition& p, std::span<const std::size_t> objectives,
                                           const PointSet& points, double eps, const Options& opt = {});

/// E(P), wE(P) or sE(P) of the AiO problem over the system valid candidates.
///  - Plain:  no valid xbar with f(xbar) <= f(x) and f(xbar) != f(x).
///  - Weak:   no valid xbar with f(xbar) < f(x) in every component.
///  - Strict: no other valid xbar with f(xbar) <= f(x).
[[nodiscard]] PointSet aio_efficient_set(const ProblemDefinition& p, const PointSet& candidates,
                                         SuperiorKind kind, const Options& opt = {});

/// True if any objective in the given blocks is negative at any point.
/// Multiplicative eps-scaling loosens instead of tightens on such values.
[[nodiscard]] bool has_negative_objective(const ProblemDefinition& p, std::span<const std::size_t> objectives,
                                          const PointSet& points, double tol = kDefaultTolerance);

}  // namespace mocs

#endif  // MOCS_DOMINANCE_HPP
