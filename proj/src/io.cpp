#include "mocs/io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "mocs/dominance.hpp"
#include "mocs/errors.hpp"

namespace mocs {

namespace {

using InJson = nlohmann::json;

[[noreturn]] void shape_error(const std::string& path, const std::string& msg) {
  throw ParseError(path + ": " + msg);
}

void only_keys(const InJson& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) shape_error(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::ranges::find(allowed, std::string_view(key)) == allowed.end())
      shape_error(path, "unknown key '" + key + "'");
  }
}

const InJson& required(const InJson& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) shape_error(path, std::string("missing key '") + key + "'");
  return *it;
}

std::string as_string(const InJson& v, const std::string& path) {
  if (!v.is_string()) shape_error(path, "expected a string");
  return v.get<std::string>();
}

double as_number(const InJson& v, const std::string& path) {
  if (!v.is_number()) shape_error(path, "expected a number");
  return v.get<double>();
}

const InJson& as_array(const InJson& v, const std::string& path) {
  if (!v.is_array()) shape_error(path, "expected an array");
  return v;
}

std::size_t variable_index(const ProblemDefinition& p, const std::string& name, const std::string& path) {
  auto idx = p.find_variable(name);
  if (!idx) throw ValidationError(path + ": unknown variable '" + name + "'");
  return *idx;
}

LinearFunction parse_terms(const ProblemDefinition& p, const InJson& terms, double constant,
                           const std::string& path) {
  if (!terms.is_object()) shape_error(path, "expected an object of variable coefficients");
  LinearFunction fn;
  fn.constant = constant;
  for (const auto& [name, coeff] : terms.items())
    fn.terms.push_back({variable_index(p, name, path), as_number(coeff, path + "." + name)});
  fn.normalize();
  return fn;
}

Constraint parse_constraint(const ProblemDefinition& p, const InJson& c, const std::string& path,
                            bool linking) {
  if (linking)
    only_keys(c, path, {"name", "terms", "relation", "rhs", "subsystems"});
  else
    only_keys(c, path, {"name", "terms", "relation", "rhs"});
  Constraint out;
  out.name = as_string(required(c, path, "name"), path + ".name");
  out.fn = parse_terms(p, required(c, path, "terms"), 0.0, path + ".terms");
  const auto rel = as_string(required(c, path, "relation"), path + ".relation");
  auto r = relation_from_string(rel);
  if (!r) shape_error(path + ".relation", "unknown relation '" + rel + "'");
  out.relation = *r;
  out.rhs = as_number(required(c, path, "rhs"), path + ".rhs");
  return out;
}

}  // namespace

ProblemDefinition parse_problem(std::string_view text) {
  InJson doc;
  try {
    doc = InJson::parse(text);
  } catch (const InJson::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what(), e.byte);
  }
  only_keys(doc, "$", {"variables", "subsystems", "linking"});

  ProblemDefinition p;
  const auto& vars = as_array(required(doc, "$", "variables"), "$.variables");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::string path = "$.variables[" + std::to_string(i) + "]";
    only_keys(vars[i], path, {"name", "min", "max", "steps"});
    Variable v;
    v.name = as_string(required(vars[i], path, "name"), path + ".name");
    v.min = as_number(required(vars[i], path, "min"), path + ".min");
    v.max = as_number(required(vars[i], path, "max"), path + ".max");
    const auto& steps = required(vars[i], path, "steps");
    if (!steps.is_number_integer() || steps.get<long long>() < 1)
      throw ValidationError(path + ".steps: expected a positive integer");
    v.steps = steps.get<std::size_t>();
    if (p.find_variable(v.name)) throw ValidationError("duplicate variable name '" + v.name + "'");
    p.variables.push_back(std::move(v));
  }

  const auto& subs = as_array(required(doc, "$", "subsystems"), "$.subsystems");
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const std::string path = "$.subsystems[" + std::to_string(i) + "]";
    only_keys(subs[i], path, {"name", "variables", "objectives", "constraints"});
    Subsystem s;
    s.name = as_string(required(subs[i], path, "name"), path + ".name");
    for (const auto& v : as_array(required(subs[i], path, "variables"), path + ".variables")) {
      const auto idx = variable_index(p, as_string(v, path + ".variables"), path + ".variables");
      if (std::ranges::find(s.variables, idx) != s.variables.end())
        throw ValidationError(path + ".variables: variable listed twice");
      s.variables.push_back(idx);
    }
    std::ranges::sort(s.variables);
    const auto& objs = as_array(required(subs[i], path, "objectives"), path + ".objectives");
    for (std::size_t k = 0; k < objs.size(); ++k) {
      const std::string op = path + ".objectives[" + std::to_string(k) + "]";
      only_keys(objs[k], op, {"name", "terms", "constant"});
      Objective f;
      f.name = as_string(required(objs[k], op, "name"), op + ".name");
      const double constant = objs[k].contains("constant") ? as_number(objs[k]["constant"], op + ".constant") : 0.0;
      f.fn = parse_terms(p, required(objs[k], op, "terms"), constant, op + ".terms");
      s.objectives.push_back(std::move(f));
    }
    if (subs[i].contains("constraints")) {
      const auto& cons = as_array(subs[i]["constraints"], path + ".constraints");
      for (std::size_t k = 0; k < cons.size(); ++k)
        s.constraints.push_back(parse_constraint(p, cons[k], path + ".constraints[" + std::to_string(k) + "]", false));
    }
    p.subsystems.push_back(std::move(s));
  }

  if (doc.contains("linking")) {
    const auto& links = as_array(doc["linking"], "$.linking");
    for (std::size_t j = 0; j < links.size(); ++j) {
      const std::string path = "$.linking[" + std::to_string(j) + "]";
      LinkingConstraint l;
      l.constraint = parse_constraint(p, links[j], path, true);
      if (links[j].contains("subsystems")) {
        l.explicit_subsystems = true;
        for (const auto& s : as_array(links[j]["subsystems"], path + ".subsystems")) {
          const auto name = as_string(s, path + ".subsystems");
          auto idx = p.find_subsystem(name);
          if (!idx) throw ValidationError(path + ".subsystems: unknown subsystem '" + name + "'");
          l.subsystems.push_back(*idx);
        }
        std::ranges::sort(l.subsystems);
        if (std::ranges::adjacent_find(l.subsystems) != l.subsystems.end())
          throw ValidationError(path + ".subsystems: subsystem listed twice");
      } else {
        l.subsystems = subsystems_touching(p, l.constraint);
      }
      p.linking.push_back(std::move(l));
    }
  }

  validate(p);
  return p;
}

std::vector<Point> parse_points(std::string_view text) {
  InJson doc;
  try {
    doc = InJson::parse(text);
  } catch (const InJson::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what(), e.byte);
  }
  const InJson* list = &doc;
  if (doc.is_object()) list = &required(doc, "$", "points");
  as_array(*list, "$.points");
  std::vector<Point> out;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const std::string path = "$.points[" + std::to_string(i) + "]";
    const InJson* coords = &(*list)[i];
    if (coords->is_object()) coords = &required(*coords, path, "x");
    Point x;
    for (const auto& v : as_array(*coords, path)) x.push_back(as_number(v, path));
    if (!out.empty() && x.size() != out.front().size()) throw ValidationError(path + ": dimension mismatch");
    out.push_back(std::move(x));
  }
  if (out.empty()) throw ValidationError("point list is empty");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProblemDefinition load_problem(const std::string& path) { return parse_problem(read_file(path)); }

Json function_terms_to_json(const ProblemDefinition& p, const LinearFunction& fn) {
  Json terms = Json::object();
  for (const auto& t : fn.terms) terms[p.variables[t.var].name] = t.coeff;
  return terms;
}

namespace {

Json constraint_to_json(const ProblemDefinition& p, const Constraint& c) {
  Json j;
  j["name"] = c.name;
  j["terms"] = function_terms_to_json(p, c.fn);
  j["relation"] = std::string(to_string(c.relation));
  j["rhs"] = c.rhs;
  return j;
}

}  // namespace

Json problem_to_json(const ProblemDefinition& p) {
  Json doc;
  Json vars = Json::array();
  for (const auto& v : p.variables)
    vars.push_back(Json{{"name", v.name}, {"min", v.min}, {"max", v.max}, {"steps", v.steps}});
  doc["variables"] = std::move(vars);

  Json subs = Json::array();
  for (const auto& s : p.subsystems) {
    Json js;
    js["name"] = s.name;
    Json names = Json::array();
    for (auto v : s.variables) names.push_back(p.variables[v].name);
    js["variables"] = std::move(names);
    Json objs = Json::array();
    for (const auto& f : s.objectives)
      objs.push_back(Json{{"name", f.name}, {"terms", function_terms_to_json(p, f.fn)}, {"constant", f.fn.constant}});
    js["objectives"] = std::move(objs);
    Json cons = Json::array();
    for (const auto& c : s.constraints) cons.push_back(constraint_to_json(p, c));
    js["constraints"] = std::move(cons);
    subs.push_back(std::move(js));
  }
  doc["subsystems"] = std::move(subs);

  Json links = Json::array();
  for (const auto& l : p.linking) {
    Json jl = constraint_to_json(p, l.constraint);
    if (l.explicit_subsystems) {
      Json names = Json::array();
      for (auto s : l.subsystems) names.push_back(p.subsystems[s].name);
      jl["subsystems"] = std::move(names);
    }
    links.push_back(std::move(jl));
  }
  doc["linking"] = std::move(links);
  return doc;
}

std::vector<std::string> objective_labels(const ProblemDefinition& p) {
  std::vector<std::string> out;
  for (const auto& s : p.subsystems)
    for (const auto& f : s.objectives) out.push_back(s.name + "." + f.name);
  return out;
}

Json point_set_to_json(const ProblemDefinition& p, const PointSet& s) {
  Json j;
  Json names = Json::array();
  for (const auto& v : p.variables) names.push_back(v.name);
  j["variables"] = std::move(names);
  j["objective_names"] = objective_labels(p);
  j["count"] = s.size();
  Json pts = Json::array();
  for (const auto& x : s) pts.push_back(Json{{"x", x}, {"f", aio_objective(p, x)}});
  j["points"] = std::move(pts);
  return j;
}

std::string point_set_to_csv(const ProblemDefinition& p, const PointSet& s) {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : p.variables) {
    out << (first ? "" : ",") << v.name;
    first = false;
  }
  for (const auto& label : objective_labels(p)) out << ',' << label;
  out << '\n';
  for (const auto& x : s) {
    first = true;
    for (double v : x) {
      out << (first ? "" : ",") << Json(v).dump();
      first = false;
    }
    for (double v : aio_objective(p, x)) out << ',' << Json(v).dump();
    out << '\n';
  }
  return out.str();
}

}  // namespace mocs
