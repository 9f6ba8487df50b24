#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mukai/multipoly.hpp"
#include "mukai/rational_matrix.hpp"
#include "mukai/report.hpp"

namespace mukai::cubics {

using poly::MultiPoly;
using poly::Point;
using report::VerificationReport;

/// Projective linear subspace of P^{n-1}, kept in both presentations:
/// spanning points and cutting linear forms. Both are stored in reduced
/// row echelon form, so equal subspaces compare equal.
class LinearSubspace {
 public:
  static LinearSubspace from_points(std::size_t ambient_vars, const std::vector<Point>& points);
  static LinearSubspace from_forms(std::size_t ambient_vars, const std::vector<Point>& forms);
  /// Both presentations at once; rejected unless they describe the same subspace.
  static LinearSubspace from_both(std::size_t ambient_vars, const std::vector<Point>& points,
                                  const std::vector<Point>& forms);

  std::size_t ambient_vars() const { return n_; }
  /// Projective dimension.
  int dimension() const { return static_cast<int>(points_.size()) - 1; }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<Point>& forms() const { return forms_; }
  bool contains_point(const Point& p) const;

  /// Linear parametrization in the given parameter names, one per spanning point.
  std::vector<MultiPoly> parametrization(const std::vector<std::string>& params) const;
  std::vector<MultiPoly> parametrization() const;

  std::string to_string(const std::vector<std::string>& vars) const;
  bool operator==(const LinearSubspace& o) const { return n_ == o.n_ && forms_ == o.forms_; }
  bool operator<(const LinearSubspace& o) const { return forms_ < o.forms_; }

 private:
  std::size_t n_ = 0;
  std::vector<Point> points_;
  std::vector<Point> forms_;
};

/// Scales so the first nonzero coordinate is 1.
Point normalize_point(const Point& p);
bool projectively_equal(const Point& a, const Point& b);

std::vector<MultiPoly> gradient(const MultiPoly& f);
bool singular_at(const MultiPoly& f, const Point& p);
/// Singular point of the complete intersection V(eqs): on every equation and
/// Jacobian rank below the number of equations.
bool singular_on_intersection(const std::vector<MultiPoly>& eqs, const Point& p);
linalg::Matrix hessian_at(const MultiPoly& f, const Point& p);
/// Ordinary double point test: singular and Hessian of rank nvars − 1.
bool is_node(const MultiPoly& f, const Point& p);
/// All partials vanish identically on a parametrization of L.
bool singular_along(const MultiPoly& f, const LinearSubspace& l);
bool contains_subspace(const MultiPoly& f, const LinearSubspace& l);
/// Largest k with f ∈ I_L^k (checked monomially after a linear coordinate change).
int vanishing_order(const MultiPoly& f, const LinearSubspace& l);

/// Coordinate permutation: sigma[i] is the image of coordinate i.
using Permutation = std::vector<std::size_t>;
Point permute(const Point& p, const Permutation& sigma);
LinearSubspace permute(const LinearSubspace& l, const Permutation& sigma);
/// Orbit under the group generated by `generators`, deduplicated projectively.
std::vector<Point> orbit_closure(const Point& seed, const std::vector<Permutation>& generators);
std::vector<LinearSubspace> orbit_closure(const LinearSubspace& seed, const std::vector<Permutation>& generators);
std::vector<Permutation> symmetric_group_generators(std::size_t n);

/// Restriction of a form on P^{n-1} to a hyperplane, in coordinates w0..w_{n-2}.
struct HyperplaneSection {
  Point hyperplane;
  std::vector<Point> basis;     // spanning points of the hyperplane
  MultiPoly restricted;
  /// Coordinates of an ambient point of the hyperplane in the section's frame.
  Point to_section(const Point& ambient) const;
  LinearSubspace to_section(const LinearSubspace& ambient) const;
};
HyperplaneSection hyperplane_section(const MultiPoly& f, const Point& hyperplane);

// Catalog

/// Σx_i = 0 and Σx_i³ = 0 in P⁵ (variables x1..x6).
std::vector<MultiPoly> segre_p5();
/// The Segre cubic in P⁴ after eliminating x6 = −(x1+..+x5).
MultiPoly segre_p4();
Point segre_seed_node();                 // (1:1:1:−1:−1:−1)
LinearSubspace segre_seed_plane();       // x1+x2 = x3+x4 = x5+x6 = 0
Point segre_to_p4(const Point& p);
LinearSubspace segre_to_p4(const LinearSubspace& l);

/// x1x2x3 − y1y2y3 in P⁵ (variables x1 x2 x3 y1 y2 y3).
MultiPoly nine_nodal_fourfold();
/// ℓ_ij = {x_k = y_l = 0 | k ≠ i, l ≠ j}, indices 1..3.
LinearSubspace nine_nodal_line(int i, int j);
/// M_ij = {x_i = y_j = 0}.
LinearSubspace nine_nodal_space(int i, int j);
std::vector<Permutation> nine_nodal_symmetries();
/// Default general hyperplane used for W₃.
Point default_nine_nodal_hyperplane();
/// Default hyperplane through ℓ_11; the section is singular along that line.
Point default_line_hyperplane();

// Cylinder ingredients

struct ResidualLine {
  std::vector<std::string> plane_vars;  // s, t, u; ℓ = {u = 0}
  std::vector<std::string> param_vars;  // empty for a numeric λ
  MultiPoly restricted;                 // f|Π_λ
  MultiPoly residual;                   // L_λ
  MultiPoly remainder;
  bool exact = false;
};

bool double_line_membership(const MultiPoly& f, const LinearSubspace& line);
/// Plane Π_λ = ⟨ℓ, λ⟩ for a numeric λ.
ResidualLine residual_line(const MultiPoly& f, const LinearSubspace& line, const Point& lambda);
/// λ = a·v0 + b·v1 + c·v2 over a complement ⟨v0,v1,v2⟩ of ℓ, with a, b, c symbolic.
ResidualLine residual_line_parametric(const MultiPoly& f, const LinearSubspace& line);

std::size_t quadric_rank(const MultiPoly& g);
linalg::Matrix gram_matrix(const MultiPoly& g);

struct CremonaData {
  std::vector<MultiPoly> linear_forms;  // l1..l4 cutting out p
  MultiPoly quadric;
  std::vector<MultiPoly> components;    // g·l1, .., g·l4, f
  VerificationReport checks;
};

/// Throws std::invalid_argument if p is not singular on f, if g has rank
/// other than 4, or if g is not singular at p. A default g = Σ l_i² is used
/// when none is supplied.
CremonaData cremona_transform(const MultiPoly& f, const Point& p, std::optional<MultiPoly> g = std::nullopt);

/// Plain-text cubic description, one `key: value` per line, '#' comments:
///
///   vars: x0 x1 x2 x3 x4          (optional; default is the sorted identifiers of f)
///   f: x0*x1*x2 - x3^3 + x4^3     (required; polynomial syntax of poly::parse)
///   node: 1 0 0 0 0               (expected ordinary double point; repeatable)
///   line: 1 0 0 0 0 | 0 1 0 0 0   (expected singular line, by spanning points)
///   subspace: 1 0 0 0 0 | ...     (expected contained subspace)
///
/// Coordinates are integers or a/b.
struct CubicFile {
  MultiPoly f;
  std::vector<Point> nodes;
  std::vector<LinearSubspace> lines;
  std::vector<LinearSubspace> subspaces;
};

CubicFile parse_cubic_file(const std::string& text);
CubicFile load_cubic_file(const std::string& path);

}  // namespace mukai::cubics
