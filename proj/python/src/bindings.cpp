// Python bindings. Problems are opaque handles; point sets cross the boundary
// as lists of lists; subsystem and linking indices are zero-based.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mocs/bounds.hpp"
#include "mocs/compromise.hpp"
#include "mocs/dominance.hpp"
#include "mocs/errors.hpp"
#include "mocs/hierarchical.hpp"
#include "mocs/io.hpp"
#include "mocs/structure.hpp"
#include "mocs/transform.hpp"

namespace py = pybind11;
using namespace mocs;
using Points = std::vector<Point>;
using Idx = std::vector<std::size_t>;

namespace {

SuperiorKind parse_kind(const std::string& s) {
  if (s == "weak") return SuperiorKind::Weak;
  if (s == "plain") return SuperiorKind::Plain;
  if (s == "strict") return SuperiorKind::Strict;
  throw InvalidArgument("kind must be weak, plain or strict");
}

Options options(unsigned threads, double tolerance) {
  Options o;
  o.threads = threads;
  o.tolerance = tolerance;
  return o;
}

PointSet candidates_or_grid(const ProblemDefinition& p, const std::optional<Points>& c, const Options& o) {
  return c ? PointSet::from_points(p.dimension(), *c, o.tolerance) : candidate_grid(p, o);
}

Idx or_all(const std::optional<Idx>& v, Idx all) { return v ? *v : std::move(all); }

}  // namespace

PYBIND11_MODULE(_mocs, m) {
  m.doc() = "Superiority, hierarchical filtering and compromise for multiobjective complex systems";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<InternalError>(m, "InternalError", base.ptr());

  py::class_<ProblemDefinition>(m, "Problem")
      .def_static("from_json", [](const std::string& text) { return parse_problem(text); })
      .def_static("load", &load_problem, py::arg("path"))
      .def("to_json", [](const ProblemDefinition& p) { return problem_to_json(p).dump(); })
      .def_property_readonly("dimension", &ProblemDefinition::dimension)
      .def_property_readonly("variables",
                             [](const ProblemDefinition& p) {
                               std::vector<std::string> out;
                               for (const auto& v : p.variables) out.push_back(v.name);
                               return out;
                             })
      .def_property_readonly("subsystems", [](const ProblemDefinition& p) {
        std::vector<std::string> out;
        for (const auto& s : p.subsystems) out.push_back(s.name);
        return out;
      });

  m.def(
      "grid",
      [](const ProblemDefinition& p, std::size_t grid_cap) {
        Options o;
        o.grid_cap = grid_cap;
        return candidate_grid(p, o).points();
      },
      py::arg("problem"), py::arg("grid_cap") = Options{}.grid_cap);

  m.def(
      "superior_set",
      [](const ProblemDefinition& p, const Idx& objectives, std::optional<Idx> subsystems, std::optional<Idx> linking,
         const std::string& kind, std::optional<double> eps, std::optional<Points> candidates, unsigned threads,
         double tolerance) {
        const auto o = options(threads, tolerance);
        const auto scope = Scope::make(objectives, or_all(subsystems, all_subsystems(p)), or_all(linking, all_linking(p)));
        const auto c = candidates_or_grid(p, candidates, o);
        return (eps ? eps_superior_set(p, scope, c, *eps, o) : superior_set(p, scope, c, parse_kind(kind), o)).points();
      },
      py::arg("problem"), py::arg("objectives"), py::arg("subsystems") = py::none(), py::arg("linking") = py::none(),
      py::arg("kind") = "plain", py::arg("eps") = py::none(), py::arg("candidates") = py::none(), py::arg("threads") = 1,
      py::arg("tolerance") = kDefaultTolerance);

  m.def(
      "efficient_set",
      [](const ProblemDefinition& p, const std::string& kind, std::optional<Points> candidates, unsigned threads) {
        const auto o = options(threads, kDefaultTolerance);
        return aio_efficient_set(p, candidates_or_grid(p, candidates, o), parse_kind(kind), o).points();
      },
      py::arg("problem"), py::arg("kind") = "plain", py::arg("candidates") = py::none(), py::arg("threads") = 1);

  m.def(
      "hierarchical",
      [](const ProblemDefinition& p, const std::string& algorithm, Idx order, double eps, double delta, double big_m) {
        HierarchicalConfig cfg{std::move(order), eps, delta, big_m};
        const auto grid = candidate_grid(p);
        HierarchicalResult r;
        if (algorithm == "full") r = hierarchical_full(p, grid, cfg);
        else if (algorithm == "incremental") r = hierarchical_incremental(p, grid, cfg);
        else if (algorithm == "eps") r = hierarchical_eps(p, grid, cfg);
        else if (algorithm == "eps-adaptive") r = hierarchical_eps_adaptive(p, grid, cfg);
        else throw InvalidArgument("algorithm must be full, incremental, eps or eps-adaptive");
        py::dict d;
        d["points"] = r.points.points();
        d["eps_star"] = r.eps_star ? py::cast(*r.eps_star) : py::none();
        d["warnings"] = r.warnings;
        py::list stages;
        for (const auto& s : r.stages) stages.append(py::make_tuple(s.subsystem, s.count_in, s.count_out));
        d["stages"] = stages;
        return d;
      },
      py::arg("problem"), py::arg("algorithm") = "full", py::arg("order") = Idx{}, py::arg("eps") = 0.0,
      py::arg("delta") = kDefaultDelta, py::arg("big_m") = kDefaultBigM);

  m.def(
      "ideal_bounds",
      [](const ProblemDefinition& p) {
        const auto b = compute_ideal_bounds(p, candidate_grid(p));
        py::dict d;
        d["subsystem_level"] = b.per_subsystem_ss;
        d["system_level"] = b.per_subsystem_s;
        d["y_ssI"] = b.y_ssI;
        d["y_sI"] = b.y_sI;
        return d;
      },
      py::arg("problem"));

  m.def(
      "standard_form",
      [](const ProblemDefinition& p) {
        const auto sf = to_standard_form(p);
        py::dict d;
        std::vector<std::string> cols;
        for (const auto& v : sf.problem.variables) cols.push_back(v.name);
        d["columns"] = cols;
        d["incidence_matrix"] = sf.incidence_matrix;
        d["problem"] = sf.problem;
        return d;
      },
      py::arg("problem"));

  m.def(
      "independence",
      [](const ProblemDefinition& p) {
        const auto r = detect_independence(p);
        py::dict d;
        d["independent"] = r.independent;
        d["components"] = r.components;
        return d;
      },
      py::arg("problem"));

  m.def(
      "scalarize",
      [](const ProblemDefinition& p, std::vector<std::vector<double>> weights) {
        const auto r = scalarize_decompose(p, make_separable(p, std::move(weights)));
        py::dict d;
        d["x"] = r.x;
        d["shared_value"] = r.shared_value;
        d["block_values"] = r.block_values;
        d["total"] = r.total;
        return d;
      },
      py::arg("problem"), py::arg("weights"));

  m.def(
      "median_bounds",
      [](const Points& refs) { return median_bounds(ReferenceSet::from_points(refs)); }, py::arg("references"));

  m.def(
      "l1_compromise",
      [](const Points& refs) {
        const auto s = l1_compromise(ReferenceSet::from_points(refs));
        py::dict d;
        d["x_star"] = s.x_star;
        d["lb"] = s.lb;
        d["ub"] = s.ub;
        d["lambdas"] = s.lambdas;
        d["objective"] = s.objective;
        return d;
      },
      py::arg("references"));

  m.def(
      "is_system_valid",
      [](const ProblemDefinition& p, const Point& x, double tolerance) {
        return is_valid(p, x, all_subsystems(p), all_linking(p), tolerance);
      },
      py::arg("problem"), py::arg("x"), py::arg("tolerance") = kDefaultTolerance);
}
