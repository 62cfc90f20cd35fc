/**
 * @file model.hpp
 * @brief Complex-system problem model: variables, subsystems, linking
 * constraints, the bipartite system graph, scopes and finite point sets.
 *
 * All set computations in the library work on finite candidate grids.
 * Points are dense coordinate vectors in the problem's variable order.
 */

#ifndef MOCS_MODEL_HPP
#define MOCS_MODEL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mocs {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr std::size_t kDefaultGridCap = 10'000'000;

/// Knobs shared by the enumeration-based operations.
struct Options {
  double tolerance = kDefaultTolerance;
  std::size_t grid_cap = kDefaultGridCap;
  unsigned threads = 1;
};

using Point = std::vector<double>;

enum class Relation { LessEqual, GreaterEqual, Equal, Less, Greater };

[[nodiscard]] std::string_view to_string(Relation r);
[[nodiscard]] std::optional<Relation> relation_from_string(std::string_view s);

struct Term {
  std::size_t var = 0;  ///< index into ProblemDefinition::variables
  double coeff = 0.0;

  bool operator==(const Term&) const = default;
};

/// Affine function sum(coeff * x[var]) + constant. Terms are kept sorted by
/// variable index with no repeated index.
struct LinearFunction {
  std::vector<Term> terms;
  double constant = 0.0;

  [[nodiscard]] double evaluate(std::span<const double> x) const;
  /// Sorts terms and merges repeated variables.
  void normalize();

  bool operator==(const LinearFunction&) const = default;
};

struct Constraint {
  std::string name;
  LinearFunction fn;
  Relation relation = Relation::LessEqual;
  double rhs = 0.0;

  /// Tolerant test: "=" is |lhs-rhs| <= tol, "<=" is lhs <= rhs+tol,
  /// "<" is lhs < rhs-tol, and symmetrically for ">=" and ">".
  [[nodiscard]] bool holds(std::span<const double> x, double tol) const;

  bool operator==(const Constraint&) const = default;
};

struct Objective {
  std::string name;
  LinearFunction fn;

  bool operator==(const Objective&) const = default;
};

struct Variable {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  std::size_t steps = 1;

  /// k-th grid value; endpoints inclusive.
  [[nodiscard]] double grid_value(std::size_t k) const;

  bool operator==(const Variable&) const = default;
};

struct Subsystem {
  std::string name;
  std::vector<std::size_t> variables;  ///< pred(sigma_i), ascending
  std::vector<Objective> objectives;   ///< p_i >= 1 entries
  std::vector<Constraint> constraints; ///< local constraints defining X_i

  bool operator==(const Subsystem&) const = default;
};

/// A linking constraint together with the subsystems it couples.
struct LinkingConstraint {
  Constraint constraint;
  std::vector<std::size_t> subsystems;  ///< pred(kappa_j), ascending, size >= 2
  /// True when the subsystem list came from the input rather than being
  /// derived from the variables the constraint references.
  bool explicit_subsystems = false;

  bool operator==(const LinkingConstraint&) const = default;
};

struct ProblemDefinition {
  std::vector<Variable> variables;
  std::vector<Subsystem> subsystems;
  std::vector<LinkingConstraint> linking;

  [[nodiscard]] std::size_t dimension() const { return variables.size(); }
  [[nodiscard]] std::size_t objective_dimension() const;
  /// Offset of subsystem i's block inside the concatenated AiO objective vector.
  [[nodiscard]] std::size_t objective_offset(std::size_t subsystem) const;
  [[nodiscard]] std::optional<std::size_t> find_variable(std::string_view name) const;
  [[nodiscard]] std::optional<std::size_t> find_subsystem(std::string_view name) const;

  bool operator==(const ProblemDefinition&) const = default;
};

/// Throws ValidationError on the first violated invariant.
void validate(const ProblemDefinition& p);

/// Subsystems whose variable lists intersect the variables of `c`.
[[nodiscard]] std::vector<std::size_t> subsystems_touching(const ProblemDefinition& p,
                                                           const Constraint& c);

// ---------------------------------------------------------------------------
// Complex system graph

struct ComplexSystemGraph {
  std::vector<std::string> variable_nodes;
  std::vector<std::string> subsystem_nodes;
  std::vector<std::string> linking_nodes;
  std::vector<std::pair<std::size_t, std::size_t>> var_to_sub_arcs;   ///< R(V,S), sorted
  std::vector<std::pair<std::size_t, std::size_t>> sub_to_link_arcs;  ///< R(S,C), sorted

  [[nodiscard]] std::vector<std::size_t> subsystems_of_variable(std::size_t var) const;
  [[nodiscard]] std::vector<std::size_t> variables_of_subsystem(std::size_t sub) const;
  [[nodiscard]] std::vector<std::size_t> subsystems_of_linking(std::size_t link) const;
  /// pred(pred(kappa_j)): every variable seen by a subsystem adjacent to kappa_j.
  [[nodiscard]] std::vector<std::size_t> variables_of_linking(std::size_t link) const;

  bool operator==(const ComplexSystemGraph&) const = default;
};

[[nodiscard]] ComplexSystemGraph build_graph(const ProblemDefinition& p);

/// Throws ValidationError if the graph breaks a structural invariant.
void validate(const ComplexSystemGraph& g);

/// Components of x at `nodes`, in ascending index order.
[[nodiscard]] std::vector<double> extract_subvector(std::span<const double> x,
                                                    std::span<const std::size_t> nodes);

enum class VariableKind { Local, Global };

[[nodiscard]] std::vector<VariableKind> classify_variables(const ComplexSystemGraph& g);

// ---------------------------------------------------------------------------
// Scopes and point sets

/// (F, S, C): objective scope, feasibility scope and consistency scope.
/// Indices are zero-based and kept sorted and unique.
struct Scope {
  std::vector<std::size_t> objectives;
  std::vector<std::size_t> subsystems;
  std::vector<std::size_t> linking;

  static Scope make(std::vector<std::size_t> f, std::vector<std::size_t> s,
                    std::vector<std::size_t> c);
  /// (F, all subsystems, all linking constraints).
  static Scope system(const ProblemDefinition& p, std::vector<std::size_t> f);
  /// (all, all, all).
  static Scope full(const ProblemDefinition& p);

  void check(const ProblemDefinition& p) const;

  bool operator==(const Scope&) const = default;
};

[[nodiscard]] std::vector<std::size_t> all_subsystems(const ProblemDefinition& p);
[[nodiscard]] std::vector<std::size_t> all_linking(const ProblemDefinition& p);

/// Lexicographic comparison with tolerance: coordinates within tol are equal.
[[nodiscard]] int compare_points(std::span<const double> a, std::span<const double> b, double tol);
[[nodiscard]] bool points_equal(std::span<const double> a, std::span<const double> b, double tol);

/// Finite, sorted, duplicate-free set of points of a fixed dimension.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t dimension) : dimension_(dimension) {}

  /// Sorts lexicographically and merges points equal within tol, keeping the
  /// lexicographically smaller representative.
  static PointSet from_points(std::size_t dimension, std::vector<Point> points,
                              double tol = kDefaultTolerance);
  /// Adopts points already in canonical order. Checked in debug builds.
  static PointSet from_canonical(std::size_t dimension, std::vector<Point> points);

  [[nodiscard]] std::size_t dimension() const { return dimension_; }
  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] bool empty() const { return points_.empty(); }
  [[nodiscard]] const Point& operator[](std::size_t i) const { return points_[i]; }
  [[nodiscard]] const std::vector<Point>& points() const { return points_; }
  [[nodiscard]] auto begin() const { return points_.begin(); }
  [[nodiscard]] auto end() const { return points_.end(); }

  [[nodiscard]] bool contains(std::span<const double> x, double tol = kDefaultTolerance) const;
  [[nodiscard]] bool is_subset_of(const PointSet& other, double tol = kDefaultTolerance) const;
  [[nodiscard]] bool same_as(const PointSet& other, double tol = kDefaultTolerance) const;

  /// Keeps the points whose flag is set; order is preserved.
  [[nodiscard]] PointSet select(const std::vector<char>& keep) const;

 private:
  std::size_t dimension_ = 0;
  std::vector<Point> points_;
};

[[nodiscard]] PointSet set_intersection(const PointSet& a, const PointSet& b,
                                        double tol = kDefaultTolerance);

/// Cartesian grid of every variable's range; lexicographic order.
[[nodiscard]] PointSet candidate_grid(const ProblemDefinition& p, const Options& opt = {});

/// Does x satisfy the local constraints of every subsystem in `subsystems`
/// and every linking constraint in `linking`?
[[nodiscard]] bool is_valid(const ProblemDefinition& p, std::span<const double> x,
                            std::span<const std::size_t> subsystems,
                            std::span<const std::size_t> linking, double tol);

/// X_{S,C} restricted to the candidates.
[[nodiscard]] PointSet filter_valid(const ProblemDefinition& p, const PointSet& candidates,
                                    std::span<const std::size_t> subsystems,
                                    std::span<const std::size_t> linking, const Options& opt = {});

}  // namespace mocs

#endif  // MOCS_MODEL_HPP
