#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"
#include "properties.hpp"

using namespace mocs;

namespace {

void require_clean(const props::Report& r) {
  for (const auto& f : r.failures) FAIL_CHECK(f);
  CHECK(r.checks > 0);
}

std::vector<std::size_t> reversed(std::size_t m) {
  std::vector<std::size_t> o(m);
  std::iota(o.rbegin(), o.rend(), std::size_t{0});
  return o;
}

}  // namespace

TEST_CASE("dominance properties hold on every fixture") {
  for (const auto& name : fx::problem_fixtures()) {
    const auto p = fx::load(name);
    props::Report r;
    props::dominance_properties(p, candidate_grid(p), r, name);
    require_clean(r);
  }
}

TEST_CASE("dominance properties hold on random instances") {
  for (unsigned seed = 0; seed < 20; ++seed) {
    const auto p = gen::random_problem(seed);
    props::Report r;
    props::dominance_properties(p, candidate_grid(p), r, "seed " + std::to_string(seed));
    require_clean(r);
  }
}

TEST_CASE("documented counterexamples break the naive inclusions") {
  const auto scope = fx::load("objective_scope");
  CHECK_FALSE(props::sup_monotone_in_objectives(scope, candidate_grid(scope)));
  const auto feas = fx::load("feasibility_scope");
  CHECK_FALSE(props::sup_converse_in_subsystems(feas, candidate_grid(feas)));
  // f2 is constant there, so the objective-scope inclusion happens to hold
  CHECK(props::sup_monotone_in_objectives(feas, candidate_grid(feas)));
}

TEST_CASE("hierarchical theorems on fixtures and random instances") {
  const std::vector<double> eps{0.0, 0.25, 1.0};
  for (const auto& name : fx::problem_fixtures()) {
    const auto p = fx::load(name);
    const auto grid = candidate_grid(p);
    props::Report r;
    props::algorithm_properties(p, grid, all_subsystems(p), eps, r, name);
    props::algorithm_properties(p, grid, reversed(p.subsystems.size()), eps, r, name);
    require_clean(r);
  }
  for (unsigned seed = 0; seed < 10; ++seed)
    for (bool nonnegative : {false, true}) {
      const auto p = gen::random_problem(seed, nonnegative);
      props::Report r;
      props::algorithm_properties(p, candidate_grid(p), all_subsystems(p), eps, r, "seed " + std::to_string(seed));
      require_clean(r);
    }
}
