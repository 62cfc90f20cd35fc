#ifndef MOCS_BOUNDS_HPP
#define MOCS_BOUNDS_HPP

#include <vector>

#include "mocs/model.hpp"

namespace mocs {

/// Hard cap on the number of tuples assembled by ideal_set_product.
inline constexpr std::size_t kIdealProductCap = 100'000;

/// Componentwise minimum of f_i over the (i, ∅)-valid candidates.
/// Throws InvalidArgument if no candidate is feasible for subsystem i.
[[nodiscard]] std::vector<double> subsystem_ideal_point(const ProblemDefinition& p, std::size_t i,
                                                        const PointSet& candidates, const Options& opt = {});

/// Componentwise minimum of f_i over the system valid candidates.
[[nodiscard]] std::vector<double> system_ideal_point(const ProblemDefinition& p, std::size_t i,
                                                     const PointSet& candidates, const Options& opt = {});

/// Componentwise minimum of the concatenated objective over the system valid
/// candidates (the AiO ideal point y^I).
[[nodiscard]] std::vector<double> aio_ideal_point(const ProblemDefinition& p, const PointSet& candidates,
                                                  const Options& opt = {});

struct IdealSets {
  std::vector<Point> subsystem_level;  ///< f_i(Sup(i, i, ∅)), sorted, deduplicated
  std::vector<Point> system_level;     ///< f_i(Sup(i, S, C)), sorted, deduplicated
};

[[nodiscard]] IdealSets ideal_sets(const ProblemDefinition& p, std::size_t i, const PointSet& candidates,
                                   const Options& opt = {});

/// Cartesian product of per-subsystem image sets, each tuple concatenated.
/// Throws CapExceeded beyond kIdealProductCap tuples.
[[nodiscard]] std::vector<Point> ideal_set_product(const std::vector<std::vector<Point>>& per_subsystem);

struct IdealBounds {
  std::vector<std::vector<double>> per_subsystem_ss;
  std::vector<std::vector<double>> per_subsystem_s;
  std::vector<double> y_ssI;
  std::vector<double> y_sI;
};

[[nodiscard]] IdealBounds compute_ideal_bounds(const ProblemDefinition& p, const PointSet& candidates,
                                               const Options& opt = {});

}  // namespace mocs

#endif  // MOCS_BOUNDS_HPP
