#ifndef MOCS_TRANSFORM_HPP
#define MOCS_TRANSFORM_HPP

#include <span>
#include <utility>
#include <vector>

#include "mocs/model.hpp"

namespace mocs {

/// Moves every linking constraint into the local constraints of each subsystem
/// it couples and extends those subsystems' variable lists accordingly. The
/// AiO feasible set is unchanged.
[[nodiscard]] ProblemDefinition inline_linking(const ProblemDefinition& p);

struct CopyEntry {
  std::size_t subsystem = 0;
  std::size_t variable = 0;  ///< index in the standard-form problem

  bool operator==(const CopyEntry&) const = default;
};

struct StandardFormResult {
  ProblemDefinition problem;
  /// copy_map[v] lists the standard-form copies of original variable v, by
  /// ascending subsystem. Local variables have a single entry.
  std::vector<std::vector<CopyEntry>> copy_map;
  /// Rows are easy-linking constraints, columns follow problem.variables.
  std::vector<std::vector<int>> incidence_matrix;
};

/// Standard form: linking constraints are inlined, then each global variable
/// is split into one copy per subsystem (named `<var>#<subsystem>`) joined by a
/// path of easy-linking equalities. Variables keep their original order with
/// copies expanded in place, which reproduces the textbook matrix layout.
[[nodiscard]] StandardFormResult to_standard_form(const ProblemDefinition& p);

/// Sets every copy to the original coordinate.
[[nodiscard]] Point lift_point(const StandardFormResult& sf, std::span<const double> x);
/// Reads each original coordinate from its first copy.
[[nodiscard]] Point project_point(const StandardFormResult& sf, std::span<const double> y);

}  // namespace mocs

#endif  // MOCS_TRANSFORM_HPP
