#ifndef MOCS_IO_HPP
#define MOCS_IO_HPP

#include <string>
#include <string_view>

#include "json.hpp"
#include "mocs/model.hpp"

namespace mocs {

using Json = nlohmann::ordered_json;

/// Parses and validates a problem document.
///
/// Top-level keys: `variables` (array of {name, min, max, steps}),
/// `subsystems` (array of {name, variables, objectives, constraints}) and an
/// optional `linking` array of {name, terms, relation, rhs[, subsystems]}.
/// Unknown keys are rejected. A linking constraint's `subsystems` list, when
/// present, names the subsystems it couples; otherwise every subsystem that
/// sees one of its variables is coupled.
///
/// Throws ParseError for syntax and shape errors and ValidationError for
/// violated model invariants.
[[nodiscard]] ProblemDefinition parse_problem(std::string_view text);

[[nodiscard]] ProblemDefinition load_problem(const std::string& path);

[[nodiscard]] Json problem_to_json(const ProblemDefinition& p);
[[nodiscard]] Json function_terms_to_json(const ProblemDefinition& p, const LinearFunction& fn);

/// {"variables": [...], "objective_names": [...], "count": n,
///  "points": [{"x": [...], "f": [...]}, ...]}
[[nodiscard]] Json point_set_to_json(const ProblemDefinition& p, const PointSet& s);

/// Column labels of the AiO objective vector, "<subsystem>.<objective>".
[[nodiscard]] std::vector<std::string> objective_labels(const ProblemDefinition& p);

/// CSV with a header of variable names then objective labels.
[[nodiscard]] std::string point_set_to_csv(const ProblemDefinition& p, const PointSet& s);

/// Parses a list of points: either an array of number arrays, or an object
/// whose "points" array holds number arrays or {"x": [...]} entries (the
/// point-set output format). Duplicates are kept.
[[nodiscard]] std::vector<Point> parse_points(std::string_view text);

/// Reads the file at `path` into a string; throws Error when unreadable.
[[nodiscard]] std::string read_file(const std::string& path);

}  // namespace mocs

#endif  // MOCS_IO_HPP
