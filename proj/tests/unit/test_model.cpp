#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "mocs/errors.hpp"
#include "mocs/io.hpp"
#include "mocs/model.hpp"
#include "oracle.hpp"

using namespace mocs;

namespace {

const char* kTiny = R"({
  "variables": [{"name": "a", "min": 0, "max": 1, "steps": 3}, {"name": "b", "min": 0, "max": 2, "steps": 2}],
  "subsystems": [
    {"name": "s1", "variables": ["a"], "objectives": [{"name": "f", "terms": {"a": 1}}]},
    {"name": "s2", "variables": ["b"], "objectives": [{"name": "g", "terms": {"b": -1}, "constant": 2}],
     "constraints": [{"name": "cap", "terms": {"b": 1}, "relation": "<", "rhs": 2}]}
  ],
  "linking": [{"name": "tie", "terms": {"a": 1, "b": -1}, "relation": "<=", "rhs": 0}]
})";

std::string replace(std::string s, const std::string& from, const std::string& to) {
  s.replace(s.find(from), from.size(), to);
  return s;
}

}  // namespace

TEST_CASE("parse_problem reads variables, subsystems and linking") {
  const auto p = parse_problem(kTiny);
  REQUIRE(p.variables.size() == 2);
  CHECK(p.variables[1].max == 2.0);
  REQUIRE(p.subsystems.size() == 2);
  CHECK(p.subsystems[1].objectives[0].fn.constant == 2.0);
  CHECK(p.subsystems[1].constraints[0].relation == Relation::Less);
  REQUIRE(p.linking.size() == 1);
  CHECK(p.linking[0].subsystems == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(p.linking[0].explicit_subsystems);
  CHECK(p.objective_dimension() == 2);
  CHECK(p.objective_offset(1) == 1);
}

TEST_CASE("problem JSON round-trips") {
  for (const auto& name : fx::problem_fixtures()) {
    const auto p = fx::load(name);
    CHECK_MESSAGE(parse_problem(problem_to_json(p).dump()) == p, name);
  }
}

TEST_CASE("parse errors carry positions and validation errors are distinct") {
  try {
    (void)parse_problem("{\"variables\": [}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() != ParseError::npos);
  }
  CHECK_THROWS_AS((void)parse_problem(replace(kTiny, "\"steps\": 3", "\"steps\": 0")), ValidationError);
  CHECK_THROWS_AS((void)parse_problem(replace(kTiny, "\"steps\": 3", "\"steps\": 1")), ValidationError);
  CHECK_THROWS_AS((void)parse_problem(replace(kTiny, "\"max\": 1", "\"max\": -1")), ValidationError);
  CHECK_THROWS_AS((void)parse_problem(replace(kTiny, "{\"a\": 1}}]},", "{\"zz\": 1}}]},")), ValidationError);
  CHECK_THROWS_AS((void)parse_problem(replace(kTiny, "\"constant\": 2", "\"konstant\": 2")), ParseError);
  CHECK_THROWS_AS((void)parse_problem(replace(kTiny, "\"relation\": \"<\"", "\"relation\": \"~\"")), ParseError);
  CHECK_THROWS_AS((void)parse_problem(replace(kTiny, "\"name\": \"b\"", "\"name\": \"a\"")), ValidationError);
  // the linking constraint would touch a single subsystem
  CHECK_THROWS_AS((void)parse_problem(replace(kTiny, "{\"a\": 1, \"b\": -1}", "{\"a\": 1}")), ValidationError);
  // objective referencing a variable the subsystem does not see
  CHECK_THROWS_AS((void)parse_problem(replace(kTiny, "{\"b\": -1}", "{\"a\": -1}")), ValidationError);
  CHECK_THROWS_AS(fx::load("orphan_variable"), ValidationError);
}

TEST_CASE("build_graph on the four-variable example") {
  const auto p = fx::load("example1");
  const auto g = build_graph(p);
  validate(g);
  CHECK(g.variable_nodes == std::vector<std::string>{"x1", "x2", "x3", "x4"});
  using Arc = std::pair<std::size_t, std::size_t>;
  CHECK(g.var_to_sub_arcs == std::vector<Arc>{{0, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 2}});
  CHECK(g.sub_to_link_arcs == std::vector<Arc>{{0, 0}, {2, 0}});
  CHECK(g.subsystems_of_linking(0) == std::vector<std::size_t>{0, 2});
  CHECK(g.variables_of_linking(0) == std::vector<std::size_t>{0, 3});
  CHECK(g.subsystems_of_variable(0) == std::vector<std::size_t>{0, 1});

  const auto kinds = classify_variables(g);
  CHECK(kinds == std::vector<VariableKind>{VariableKind::Global, VariableKind::Local, VariableKind::Local,
                                           VariableKind::Local});
}

TEST_CASE("graph validation rejects malformed graphs") {
  ComplexSystemGraph g;
  g.variable_nodes = {"x"};
  g.subsystem_nodes = {"s1", "s2"};
  g.var_to_sub_arcs = {{0, 0}};
  CHECK_THROWS_AS(validate(g), ValidationError);  // s2 has no variable
  g.var_to_sub_arcs = {{0, 0}, {0, 1}};
  validate(g);
  g.linking_nodes = {"k"};
  g.sub_to_link_arcs = {{0, 0}};
  CHECK_THROWS_AS(validate(g), ValidationError);  // linking node with one subsystem
  g.sub_to_link_arcs = {{0, 0}, {0, 0}, {1, 0}};
  CHECK_THROWS_AS(validate(g), ValidationError);  // duplicate arc
}

TEST_CASE("classify_variables on the illustrative problem") {
  const auto kinds = classify_variables(build_graph(fx::load("illustrative")));
  for (auto k : kinds) CHECK(k == VariableKind::Local);
  const auto two = classify_variables(build_graph(fx::load("decomposition_two")));
  CHECK(two == std::vector<VariableKind>{VariableKind::Local, VariableKind::Local, VariableKind::Global});
}

TEST_CASE("extract_subvector") {
  const std::vector<double> x{0.5, 1.0, 2.0, 3.0};
  const std::vector<std::size_t> nodes{2, 0};
  CHECK(extract_subvector(x, nodes) == std::vector<double>{0.5, 2.0});
  CHECK(extract_subvector(x, std::vector<std::size_t>{}).empty());
  CHECK_THROWS_AS((void)extract_subvector(x, std::vector<std::size_t>{4}), InvalidArgument);
}

TEST_CASE("candidate_grid enumerates in lexicographic order with exact endpoints") {
  const auto p = parse_problem(kTiny);
  const auto g = candidate_grid(p);
  REQUIRE(g.size() == 6);
  CHECK(g[0] == Point{0.0, 0.0});
  CHECK(g[1] == Point{0.0, 2.0});
  CHECK(g[2] == Point{0.5, 0.0});
  CHECK(g[5] == Point{1.0, 2.0});
  CHECK(fx::pts(g) == oracle::grid(p));

  Options tight;
  tight.grid_cap = 5;
  CHECK_THROWS_AS((void)candidate_grid(p, tight), CapExceeded);
}

TEST_CASE("filter_valid on the feasibility-scope problem") {
  const auto p = fx::load("feasibility_scope");
  const auto grid = candidate_grid(p);
  REQUIRE(grid.size() == 25);
  CHECK(filter_valid(p, grid, std::vector<std::size_t>{0}, {}).size() == 25);
  const auto both = filter_valid(p, grid, std::vector<std::size_t>{0, 1}, {});
  CHECK(both.size() == 15);  // x1 + x2 >= 2 on the step-0.5 grid
  CHECK(fx::pts(both) == oracle::valid_points(p, oracle::grid(p), {0, 1}, {}));
  CHECK(filter_valid(p, grid, {}, {}).same_as(grid));
}

TEST_CASE("strict constraints respect the tolerance") {
  const auto p = fx::load("nonexistence");
  const auto valid = filter_valid(p, candidate_grid(p), std::vector<std::size_t>{0, 1}, {});
  CHECK_FALSE(valid.contains(Point{0.25, 0.25}));
  CHECK(valid.contains(Point{0.25, 0.5}));
  CHECK(valid.size() == 81 - 6);
}

TEST_CASE("linking consistency is only enforced when in scope") {
  const auto p = fx::load("illustrative");
  const auto grid = candidate_grid(p);
  const std::vector<std::size_t> both{0, 1};
  const std::vector<std::size_t> k{0};
  const auto unlinked = filter_valid(p, grid, both, {});
  const auto linked = filter_valid(p, grid, both, k);
  CHECK(linked.is_subset_of(unlinked));
  CHECK(linked.size() < unlinked.size());
  for (const auto& x : linked) CHECK(x[0] == doctest::Approx(x[2]));
}

TEST_CASE("PointSet canonicalizes and supports set algebra") {
  const auto a = PointSet::from_points(2, {{1, 0}, {0, 1}, {1, 0}, {0, 1 + 1e-12}});
  CHECK(a.size() == 2);
  CHECK(a[0] == Point{0, 1});
  CHECK(a.contains(Point{1, 1e-11}));
  const auto b = PointSet::from_points(2, {{1, 0}, {2, 2}});
  const auto i = set_intersection(a, b);
  CHECK(i.size() == 1);
  CHECK(i.is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK(compare_points(Point{0, 1}, Point{0, 2}, 1e-9) < 0);
  CHECK(points_equal(Point{1, 2}, Point{1, 2 + 1e-10}, 1e-9));
}

TEST_CASE("relation symbols") {
  for (auto r : {Relation::LessEqual, Relation::GreaterEqual, Relation::Equal, Relation::Less, Relation::Greater})
    CHECK(relation_from_string(to_string(r)) == r);
  CHECK_FALSE(relation_from_string("=>").has_value());
}

TEST_CASE("Scope validation") {
  const auto p = fx::load("illustrative");
  CHECK_NOTHROW(Scope::full(p).check(p));
  CHECK_THROWS_AS(Scope::make({5}, {}, {}).check(p), InvalidArgument);
  CHECK_THROWS_AS(Scope::make({0}, {0}, {3}).check(p), InvalidArgument);
  CHECK(Scope::make({1, 0, 1}, {}, {}).objectives == std::vector<std::size_t>{0, 1});
}
