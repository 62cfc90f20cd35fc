#include "mocs/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mocs/bounds.hpp"
#include "mocs/compromise.hpp"
#include "mocs/dominance.hpp"
#include "mocs/errors.hpp"
#include "mocs/hierarchical.hpp"
#include "mocs/io.hpp"
#include "mocs/structure.hpp"
#include "mocs/transform.hpp"

namespace mocs::cli {

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream ss;
  ss << std::hex << std::setw(16) << std::setfill('0') << h;
  return ss.str();
}

namespace {

// A bad flag value detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string problem_path;
  double tolerance = kDefaultTolerance;
  std::size_t grid_cap = kDefaultGridCap;
  unsigned threads = 1;
  std::string csv_path;
  bool fail_on_empty = false;

  std::string objectives = "all";
  std::string subsystems = "all";
  std::string linking = "all";
  std::string kind = "plain";
  std::optional<double> eps;

  std::string algorithm = "full";
  std::string order;
  double delta = kDefaultDelta;
  double big_m = kDefaultBigM;
  bool trace = false;

  std::string weights;
  std::string references = "subsystem-superior";
  std::size_t max_refs = 8;
  bool sets = false;
  std::string point_set = "valid";
};

std::vector<std::size_t> parse_index_list(const std::string& text, std::size_t count, const char* what) {
  std::vector<std::size_t> out;
  if (text == "all") {
    for (std::size_t i = 0; i < count; ++i) out.push_back(i);
    return out;
  }
  if (text == "none") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v < 1 || static_cast<std::size_t>(v) > count)
      throw UsageError(std::string("--") + what + ": expected all, none or 1-based indices up to " +
                       std::to_string(count) + ", got '" + text + "'");
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  std::ranges::sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// 1-based permutation, order preserved.
std::vector<std::size_t> parse_order(const std::string& text, std::size_t count) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto one = parse_index_list(item, count, "order");
    if (one.size() != 1 || item == "all") throw UsageError("--order: expected comma-separated 1-based indices");
    out.push_back(one.front());
  }
  auto sorted = out;
  std::ranges::sort(sorted);
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i || sorted.size() != count) throw UsageError("--order must be a permutation of 1.." + std::to_string(count));
  return out;
}

SuperiorKind parse_kind(const std::string& k) {
  if (k == "weak") return SuperiorKind::Weak;
  if (k == "plain") return SuperiorKind::Plain;
  if (k == "strict") return SuperiorKind::Strict;
  throw UsageError("--kind must be weak, plain or strict");
}

Json stage_json(const ProblemDefinition& p, const StageRecord& s) {
  Json links = Json::array();
  for (auto j : s.linking) links.push_back(p.linking[j].constraint.name);
  return Json{{"subsystem", p.subsystems[s.subsystem].name},
              {"count_in", s.count_in},
              {"count_out", s.count_out},
              {"linking", std::move(links)}};
}

class Runner {
 public:
  Runner(std::string command, const Settings& s, std::ostream& err) : command_(std::move(command)), s_(s), err_(err) {
    opt_.tolerance = s.tolerance;
    opt_.grid_cap = s.grid_cap;
    opt_.threads = s.threads;
  }

  int execute(std::ostream& out) {
    const auto t0 = Clock::now();
    const std::string text = read_file(s_.problem_path);
    p_ = parse_problem(text);
    timings_["load"] = elapsed(t0);
    const auto t1 = Clock::now();
    Json result = dispatch();
    timings_["compute"] = elapsed(t1);

    Json report;
    report["command"] = command_;
    report["input_digest"] = "fnv1a64:" + fnv1a64_hex(text);
    report["parameters"] = parameters();
    report["result"] = std::move(result);
    report["warnings"] = warnings_;
    report["execution"] = Json{{"threads", s_.threads}, {"timings_ms", timings_}};
    out << report.dump(2) << '\n';

    if (!s_.csv_path.empty() && primary_) {
      std::ofstream csv(s_.csv_path, std::ios::binary);
      if (!csv) throw Error("cannot write '" + s_.csv_path + "'");
      csv << point_set_to_csv(p_, *primary_);
    }
    if (s_.fail_on_empty && primary_ && primary_->empty()) return kEmptyResult;
    return kOk;
  }

 private:
  using Clock = std::chrono::steady_clock;

  static double elapsed(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
  }

  Json parameters() const {
    Json j;
    j["problem"] = s_.problem_path;
    j["tolerance"] = s_.tolerance;
    j["grid_cap"] = s_.grid_cap;
    for (const auto& [k, v] : extra_params_.items()) j[k] = v;
    return j;
  }

  Scope scope_from_flags() {
    extra_params_["objectives"] = s_.objectives;
    extra_params_["subsystems"] = s_.subsystems;
    extra_params_["linking"] = s_.linking;
    return Scope::make(parse_index_list(s_.objectives, p_.subsystems.size(), "objectives"),
                       parse_index_list(s_.subsystems, p_.subsystems.size(), "subsystems"),
                       parse_index_list(s_.linking, p_.linking.size(), "linking"));
  }

  Json point_result(PointSet set) {
    Json j = point_set_to_json(p_, set);
    primary_ = std::move(set);
    return j;
  }

  Json dispatch() {
    if (command_ == "validate") return do_validate();
    if (command_ == "classify") return do_classify();
    if (command_ == "standard-form") return do_standard_form();
    if (command_ == "superior") return do_superior();
    if (command_ == "efficient") return do_efficient();
    if (command_ == "ideal") return do_ideal();
    if (command_ == "independent") return do_independent();
    if (command_ == "hierarchical") return do_hierarchical();
    if (command_ == "scalarize") return do_scalarize();
    if (command_ == "compromise") return do_compromise();
    if (command_ == "export-points") return do_export();
    throw UsageError("unknown command '" + command_ + "'");
  }

  Json do_validate() {
    validate(build_graph(p_));
    return Json{{"valid", true},
                {"variables", p_.variables.size()},
                {"subsystems", p_.subsystems.size()},
                {"linking", p_.linking.size()},
                {"objective_dimension", p_.objective_dimension()}};
  }

  Json do_classify() {
    const auto g = build_graph(p_);
    const auto kinds = classify_variables(g);
    Json vars = Json::array();
    for (std::size_t v = 0; v < kinds.size(); ++v) {
      Json subs = Json::array();
      for (auto s : g.subsystems_of_variable(v)) subs.push_back(g.subsystem_nodes[s]);
      vars.push_back(Json{{"name", g.variable_nodes[v]},
                          {"kind", kinds[v] == VariableKind::Local ? "local" : "global"},
                          {"subsystems", std::move(subs)}});
    }
    Json vs = Json::array();
    for (auto [v, s] : g.var_to_sub_arcs) vs.push_back(Json::array({g.variable_nodes[v], g.subsystem_nodes[s]}));
    Json sc = Json::array();
    for (auto [s, c] : g.sub_to_link_arcs) sc.push_back(Json::array({g.subsystem_nodes[s], g.linking_nodes[c]}));
    return Json{{"variables", std::move(vars)}, {"var_to_sub_arcs", std::move(vs)}, {"sub_to_link_arcs", std::move(sc)}};
  }

  Json do_standard_form() {
    const auto sf = to_standard_form(p_);
    Json copies = Json::object();
    for (std::size_t v = 0; v < sf.copy_map.size(); ++v) {
      Json list = Json::array();
      for (const auto& c : sf.copy_map[v])
        list.push_back(Json{{"subsystem", p_.subsystems[c.subsystem].name}, {"variable", sf.problem.variables[c.variable].name}});
      copies[p_.variables[v].name] = std::move(list);
    }
    Json columns = Json::array();
    for (const auto& v : sf.problem.variables) columns.push_back(v.name);
    return Json{{"problem", problem_to_json(sf.problem)},
                {"columns", std::move(columns)},
                {"incidence_matrix", sf.incidence_matrix},
                {"copy_map", std::move(copies)}};
  }

  Json do_superior() {
    const Scope scope = scope_from_flags();
    const auto grid = candidate_grid(p_, opt_);
    if (s_.eps) {
      extra_params_["eps"] = *s_.eps;
      if (*s_.eps > 0.0) {
        const auto valid = filter_valid(p_, grid, scope.subsystems, scope.linking, opt_);
        if (has_negative_objective(p_, scope.objectives, valid, opt_.tolerance))
          warnings_.push_back("negative objective values in scope: (1+eps) scaling loosens dominance for them");
      }
      return point_result(eps_superior_set(p_, scope, grid, *s_.eps, opt_));
    }
    extra_params_["kind"] = s_.kind;
    return point_result(superior_set(p_, scope, grid, parse_kind(s_.kind), opt_));
  }

  Json do_efficient() {
    extra_params_["kind"] = s_.kind;
    return point_result(aio_efficient_set(p_, candidate_grid(p_, opt_), parse_kind(s_.kind), opt_));
  }

  Json do_ideal() {
    extra_params_["sets"] = s_.sets;
    const auto grid = candidate_grid(p_, opt_);
    const auto b = compute_ideal_bounds(p_, grid, opt_);
    Json per = Json::array();
    for (std::size_t i = 0; i < p_.subsystems.size(); ++i) {
      Json e{{"name", p_.subsystems[i].name}, {"y_ssI", b.per_subsystem_ss[i]}, {"y_sI", b.per_subsystem_s[i]}};
      if (s_.sets) {
        const auto sets = ideal_sets(p_, i, grid, opt_);
        e["subsystem_ideal_set"] = sets.subsystem_level;
        e["system_ideal_set"] = sets.system_level;
      }
      per.push_back(std::move(e));
    }
    return Json{{"per_subsystem", std::move(per)},
                {"y_ssI", b.y_ssI},
                {"y_sI", b.y_sI},
                {"y_I", aio_ideal_point(p_, grid, opt_)}};
  }

  Json do_independent() {
    const auto r = detect_independence(p_);
    Json comps = Json::array();
    for (const auto& c : r.components) {
      Json names = Json::array();
      for (auto s : c) names.push_back(p_.subsystems[s].name);
      comps.push_back(std::move(names));
    }
    return Json{{"components", std::move(comps)}, {"independent", r.independent}};
  }

  Json do_hierarchical() {
    HierarchicalConfig cfg;
    if (!s_.order.empty()) cfg.order = parse_order(s_.order, p_.subsystems.size());
    cfg.eps = s_.eps.value_or(0.0);
    cfg.delta = s_.delta;
    cfg.big_M = s_.big_m;
    extra_params_["algorithm"] = s_.algorithm;
    extra_params_["order"] = s_.order.empty() ? "file" : s_.order;
    const auto grid = candidate_grid(p_, opt_);
    HierarchicalResult r;
    if (s_.algorithm == "full") {
      r = hierarchical_full(p_, grid, cfg, opt_);
    } else if (s_.algorithm == "incremental") {
      r = hierarchical_incremental(p_, grid, cfg, opt_);
    } else if (s_.algorithm == "eps") {
      extra_params_["eps"] = cfg.eps;
      r = hierarchical_eps(p_, grid, cfg, opt_);
    } else if (s_.algorithm == "eps-adaptive") {
      extra_params_["delta"] = cfg.delta;
      extra_params_["big_m"] = cfg.big_M;
      r = hierarchical_eps_adaptive(p_, grid, cfg, opt_);
    } else {
      throw UsageError("--algorithm must be full, incremental, eps or eps-adaptive");
    }
    for (auto& w : r.warnings) warnings_.push_back(w);

    Json stages = Json::array();
    for (const auto& st : r.stages) stages.push_back(stage_json(p_, st));
    Json probes = Json::array();
    for (const auto& pr : r.probes) {
      Json ps = Json::array();
      for (const auto& st : pr.stages) ps.push_back(stage_json(p_, st));
      probes.push_back(Json{{"eps", pr.eps}, {"success", pr.success}, {"lb", pr.lb}, {"ub", pr.ub}, {"stages", std::move(ps)}});
    }
    if (s_.trace) {
      for (const auto& st : stages) err_ << Json{{"trace", "stage"}, {"record", st}}.dump() << '\n';
      for (const auto& pr : probes) err_ << Json{{"trace", "probe"}, {"record", pr}}.dump() << '\n';
    }
    Json out;
    out["algorithm"] = s_.algorithm;
    if (r.eps_star) out["eps_star"] = *r.eps_star;
    out["stages"] = std::move(stages);
    if (!r.probes.empty()) out["probes"] = std::move(probes);
    out["points"] = point_result(std::move(r.points));
    return out;
  }

  Json do_scalarize() {
    extra_params_["weights"] = s_.weights;
    std::vector<std::vector<double>> w;
    try {
      w = Json::parse(s_.weights).get<std::vector<std::vector<double>>>();
    } catch (const Json::exception&) {
      throw UsageError("--weights expects a JSON array of per-subsystem weight arrays");
    }
    const auto sep = make_separable(p_, std::move(w));
    const auto r = scalarize_decompose(p_, sep, opt_);
    Json shared = Json::array();
    for (auto v : sep.shared) shared.push_back(p_.variables[v].name);
    return Json{{"x", r.x},
                {"f", aio_objective(p_, r.x)},
                {"shared_variables", std::move(shared)},
                {"shared_value", r.shared_value},
                {"block_values", r.block_values},
                {"total", r.total},
                {"weighted_sum", weighted_sum(p_, sep.weights, r.x)}};
  }

  Json do_compromise() {
    extra_params_["references"] = s_.references;
    ReferenceSet refs;
    if (s_.references == "subsystem-superior") {
      extra_params_["max_refs"] = s_.max_refs;
      refs = subsystem_superior_references(p_, candidate_grid(p_, opt_), s_.max_refs, opt_);
    } else if (s_.references.rfind("file:", 0) == 0) {
      refs = ReferenceSet::from_points(parse_points(read_file(s_.references.substr(5))));
      if (refs.dimension() != p_.dimension()) throw ValidationError("reference points must match the problem dimension");
    } else {
      throw UsageError("--references must be subsystem-superior or file:<path>");
    }
    const auto sol = l1_compromise(refs, opt_.tolerance);
    const bool valid = is_valid(p_, sol.x_star, all_subsystems(p_), all_linking(p_), opt_.tolerance);
    if (!valid) warnings_.push_back("the compromise point is not system valid");
    Json rj = Json::array();
    for (std::size_t j = 0; j < refs.points.size(); ++j) {
      Json e{{"x", refs.points[j]}};
      e["subsystem"] = refs.provenance[j] ? Json(p_.subsystems[*refs.provenance[j]].name) : Json(nullptr);
      rj.push_back(std::move(e));
    }
    return Json{{"references", std::move(rj)},
                {"lb", sol.lb},
                {"ub", sol.ub},
                {"x_star", sol.x_star},
                {"lambdas", sol.lambdas},
                {"objective", sol.objective},
                {"median_optimal", check_median_optimality(refs, sol.x_star, opt_.tolerance)},
                {"system_valid", valid}};
  }

  Json do_export() {
    extra_params_["set"] = s_.point_set;
    const auto grid = candidate_grid(p_, opt_);
    if (s_.point_set == "grid") return point_result(grid);
    if (s_.point_set != "valid") throw UsageError("--set must be grid or valid");
    extra_params_["subsystems"] = s_.subsystems;
    extra_params_["linking"] = s_.linking;
    const auto subs = parse_index_list(s_.subsystems, p_.subsystems.size(), "subsystems");
    const auto links = parse_index_list(s_.linking, p_.linking.size(), "linking");
    return point_result(filter_valid(p_, grid, subs, links, opt_));
  }

  std::string command_;
  const Settings& s_;
  std::ostream& err_;
  Options opt_;
  ProblemDefinition p_;
  Json extra_params_ = Json::object();
  Json timings_ = Json::object();
  std::vector<std::string> warnings_;
  std::optional<PointSet> primary_;
};

void add_common(CLI::App* sub, Settings& s) {
  sub->add_option("problem", s.problem_path, "Problem file (JSON)")->required();
  sub->add_option("--tolerance", s.tolerance, "Comparison tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--grid-cap", s.grid_cap, "Maximum number of grid points")->check(CLI::PositiveNumber);
  sub->add_option("--threads", s.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  sub->add_option("--csv", s.csv_path, "Also write the resulting point set as CSV");
  sub->add_flag("--fail-on-empty", s.fail_on_empty, "Exit with status 3 when the point set is empty");
}

void add_scope(CLI::App* sub, Settings& s, bool with_objectives) {
  if (with_objectives) sub->add_option("--objectives", s.objectives, "Objective scope F: all, none or 1-based list");
  sub->add_option("--subsystems", s.subsystems, "Feasibility scope S: all, none or 1-based list");
  sub->add_option("--linking", s.linking, "Consistency scope C: all, none or 1-based list");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Multiobjective complex systems: decomposition, superiority and compromise on finite grids", "mocs"};
  app.require_subcommand(1);

  auto* validate_cmd = app.add_subcommand("validate", "Check a problem file");
  add_common(validate_cmd, s);
  auto* classify = app.add_subcommand("classify", "Classify variables as local or global");
  add_common(classify, s);
  auto* standard = app.add_subcommand("standard-form", "Rewrite into standard form with easy-linking matrix");
  add_common(standard, s);
  auto* superior = app.add_subcommand("superior", "Scoped superior set on the grid");
  add_common(superior, s);
  add_scope(superior, s, true);
  superior->add_option("--kind", s.kind, "weak, plain or strict");
  superior->add_option("--eps", s.eps, "Compute the eps-superior set instead")->check(CLI::NonNegativeNumber);
  auto* efficient = app.add_subcommand("efficient", "Efficient set of the all-in-one problem");
  add_common(efficient, s);
  efficient->add_option("--kind", s.kind, "weak, plain or strict");
  auto* ideal = app.add_subcommand("ideal", "Subsystem and system level ideal points");
  add_common(ideal, s);
  ideal->add_flag("--sets", s.sets, "Include ideal-set images");
  auto* independent = app.add_subcommand("independent", "Block-diagonal independence report");
  add_common(independent, s);
  auto* hier = app.add_subcommand("hierarchical", "Hierarchical solution algorithms");
  add_common(hier, s);
  hier->add_option("--algorithm", s.algorithm, "full, incremental, eps or eps-adaptive");
  hier->add_option("--order", s.order, "Comma-separated 1-based subsystem order");
  hier->add_option("--eps", s.eps, "Relaxation for the eps algorithm")->check(CLI::NonNegativeNumber);
  hier->add_option("--delta", s.delta, "Bisection stopping width")->check(CLI::PositiveNumber);
  hier->add_option("--big-m", s.big_m, "Upper end of the eps bracket")->check(CLI::PositiveNumber);
  hier->add_flag("--trace", s.trace, "Write stage and probe records as JSON lines to stderr");
  auto* scalarize = app.add_subcommand("scalarize", "Weighted-sum decomposition of a separable system");
  add_common(scalarize, s);
  scalarize->add_option("--weights", s.weights, "JSON array of per-subsystem weight arrays")->required();
  auto* compromise = app.add_subcommand("compromise", "l1-median compromise of reference points");
  add_common(compromise, s);
  compromise->add_option("--references", s.references, "subsystem-superior or file:<path>");
  compromise->add_option("--max-refs", s.max_refs, "Reference points kept per subsystem")->check(CLI::PositiveNumber);
  auto* exporter = app.add_subcommand("export-points", "Export grid or valid points");
  add_common(exporter, s);
  add_scope(exporter, s, false);
  exporter->add_option("--set", s.point_set, "grid or valid");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kUsage;
  }

  const auto subs = app.get_subcommands();
  const std::string command = subs.front()->get_name();
  try {
    Runner runner(command, s, err);
    return runner.execute(out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace mocs::cli
