#ifndef MOCS_TESTS_FIXTURES_HPP
#define MOCS_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "mocs/io.hpp"
#include "mocs/model.hpp"

#ifndef MOCS_FIXTURE_DIR
#error "MOCS_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace fx {

inline std::string path(const std::string& name) { return std::string(MOCS_FIXTURE_DIR) + "/" + name + ".json"; }

inline mocs::ProblemDefinition load(const std::string& name) { return mocs::load_problem(path(name)); }

inline std::vector<mocs::Point> pts(const mocs::PointSet& s) { return s.points(); }

inline mocs::PointSet set(std::size_t dim, std::vector<mocs::Point> p) { return mocs::PointSet::from_points(dim, std::move(p)); }

/// Every fixture that describes a problem (reference lists and invalid inputs excluded).
inline const std::vector<std::string>& problem_fixtures() {
  static const std::vector<std::string> names{
      "example1",          "objective_scope",     "feasibility_scope", "weak_vs_efficient",
      "nonexistence",      "illustrative",        "decomposition_two", "decomposition_three",
      "compromise_example", "invalid_compromise", "eps_adaptive",      "separable"};
  return names;
}

}  // namespace fx

#endif  // MOCS_TESTS_FIXTURES_HPP
