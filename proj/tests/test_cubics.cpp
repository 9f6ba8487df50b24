#include <doctest.h>

#include <random>

#include "mukai/cubics.hpp"

using namespace mukai;
using namespace mukai::cubics;
using poly::parse;

namespace {

const std::vector<std::string> kP4 = {"x0", "x1", "x2", "x3", "x4"};

MultiPoly p4(const std::string& s) { return parse(s, kP4); }

// f is assembled as a sum of products of two forms vanishing on ℓ, so it lies in I_ℓ² by construction
MultiPoly singular_along_line(std::mt19937_64& rng, const LinearSubspace& line) {
  std::uniform_int_distribution<int> u(-5, 5);
  std::vector<MultiPoly> cut;
  for (const auto& form : line.forms()) cut.push_back(MultiPoly::linear(kP4, form));
  MultiPoly f(kP4);
  for (std::size_t i = 0; i < cut.size(); ++i)
    for (std::size_t j = i; j < cut.size(); ++j) {
      Point c(5);
      for (auto& x : c) x = u(rng);
      f += cut[i] * cut[j] * MultiPoly::linear(kP4, c);
    }
  return f;
}

}  // namespace

TEST_CASE("singular points of the Segre cubic") {
  const auto eqs = segre_p5();
  CHECK(singular_on_intersection(eqs, segre_seed_node()));
  CHECK_FALSE(singular_on_intersection(eqs, {1, 0, 0, 0, 0, -1}));
  const auto f = segre_p4();
  CHECK(f.is_homogeneous());
  CHECK(f.degree() == 3);
  CHECK(is_node(f, segre_to_p4(segre_seed_node())));
  CHECK_FALSE(singular_at(f, {1, 0, 0, 0, -1}));
  const auto nodes = orbit_closure(segre_seed_node(), symmetric_group_generators(6));
  CHECK(nodes.size() == 10);
  for (const auto& p : nodes) {
    CHECK(singular_on_intersection(eqs, p));
    CHECK(is_node(f, segre_to_p4(p)));
  }
}

TEST_CASE("planes of the Segre cubic") {
  const auto planes = orbit_closure(segre_seed_plane(), symmetric_group_generators(6));
  CHECK(planes.size() == 15);
  for (const auto& l : planes) {
    CHECK(l.dimension() == 2);
    CHECK(contains_subspace(segre_p5()[1], l));
    CHECK(contains_subspace(segre_p4(), segre_to_p4(l)));
  }
}

TEST_CASE("a smooth quadric has no singular points") {
  const auto q = p4("x0^2 + x1^2 + x2^2 + x3^2 - x4^2");
  CHECK_FALSE(singular_at(q, {1, 0, 0, 0, 1}));
  CHECK_FALSE(singular_at(q, {0, 3, 4, 0, 5}));
  CHECK_THROWS(singular_at(q, {0, 0, 0, 0, 0}));
}

TEST_CASE("the nine-nodal cubic fourfold") {
  const auto z = nine_nodal_fourfold();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      const auto l = nine_nodal_line(i, j);
      CHECK(l.dimension() == 1);
      CHECK(singular_along(z, l));
      const auto m = nine_nodal_space(i, j);
      CHECK(m.dimension() == 3);
      CHECK(contains_subspace(z, m));
    }
  CHECK(orbit_closure(nine_nodal_line(1, 1), nine_nodal_symmetries()).size() == 9);
  CHECK(orbit_closure(nine_nodal_space(2, 3), nine_nodal_symmetries()).size() == 9);
  // a line of Z that is not singular
  CHECK_FALSE(singular_along(z, LinearSubspace::from_forms(6, {{0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                                                               {0, 0, 0, 0, 1, 0}, {0, 0, 0, 1, 0, -1}})));
}

TEST_CASE("containment fails for a generic plane") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> u(-9, 9);
  MultiPoly f(kP4);
  for (int i = 0; i < 12; ++i) {
    Point a(5), b(5), c(5);
    for (auto* v : {&a, &b, &c})
      for (auto& x : *v) x = u(rng);
    f += MultiPoly::linear(kP4, a) * MultiPoly::linear(kP4, b) * MultiPoly::linear(kP4, c);
  }
  std::vector<Point> pts(3, Point(5));
  for (auto& p : pts)
    for (auto& x : p) x = u(rng);
  CHECK_FALSE(contains_subspace(f, LinearSubspace::from_points(5, pts)));
}

TEST_CASE("linear subspace presentations") {
  const auto a = LinearSubspace::from_points(4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  const auto b = LinearSubspace::from_forms(4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(a == b);
  CHECK(a.dimension() == 1);
  CHECK(a.contains_point({3, 4, 0, 0}));
  CHECK_FALSE(a.contains_point({3, 4, 1, 0}));
  CHECK_NOTHROW(LinearSubspace::from_both(4, {{1, 0, 0, 0}, {0, 1, 0, 0}}, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK_THROWS(LinearSubspace::from_both(4, {{1, 0, 0, 0}, {0, 1, 0, 0}}, {{0, 1, 1, 0}, {0, 0, 0, 1}}));
  CHECK_THROWS(LinearSubspace::from_both(4, {{1, 0, 0, 0}, {0, 1, 0, 0}}, {{0, 0, 1, 0}}));
  CHECK_THROWS(LinearSubspace::from_forms(2, {{1, 0}, {0, 1}}));
}

TEST_CASE("double line membership") {
  const auto line = LinearSubspace::from_forms(5, {{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
  CHECK(double_line_membership(p4("x2^2*x0 + x3*x4*x1"), line));
  CHECK_FALSE(double_line_membership(p4("x0^2*x2"), line));
  CHECK_THROWS(double_line_membership(p4("x0^3"), LinearSubspace::from_forms(5, {{0, 0, 1, 0, 0}})));
  // the same cubic after a coordinate change
  const auto moved = LinearSubspace::from_points(5, {{1, 1, 0, 0, 0}, {0, 1, 1, 1, 1}});
  std::mt19937_64 rng(17);
  for (int i = 0; i < 5; ++i) CHECK(double_line_membership(singular_along_line(rng, moved), moved));
}

TEST_CASE("residual line") {
  // f = u^2 w in plane coordinates: in P4 take the plane x3 = x4 = 0 with u = x2
  const auto line = LinearSubspace::from_forms(5, {{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
  const auto r = residual_line(p4("x2^2*x0"), line, {0, 0, 1, 0, 0});
  CHECK(r.exact);
  CHECK(r.residual == parse("s", {"s", "t", "u"}));

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> u(-7, 7);
  const auto moved = LinearSubspace::from_points(5, {{1, 2, 0, 0, 1}, {0, 1, -1, 3, 0}});
  for (int i = 0; i < 5; ++i) {
    const auto f = singular_along_line(rng, moved);
    Point lam(5);
    do {
      for (auto& x : lam) x = u(rng);
    } while (moved.contains_point(lam));
    const auto res = residual_line(f, moved, lam);
    CHECK(res.exact);
    CHECK(res.remainder.is_zero());
    const auto u2 = MultiPoly::variable(res.restricted.variables(), 2).pow(2);
    CHECK(u2 * res.residual == res.restricted);
    CHECK(res.residual.degree() <= 1);

    const auto sym = residual_line_parametric(f, moved);
    CHECK(sym.exact);
    CHECK(sym.param_vars.size() == 3);
    CHECK(MultiPoly::variable(sym.restricted.variables(), 2).pow(2) * sym.residual == sym.restricted);
    CHECK(sym.residual.degree_in({0, 1, 2}) == 1);
    CHECK(sym.residual.order_in({0, 1, 2}) == 1);
  }
  CHECK_THROWS(residual_line(p4("x0^2*x2"), line, {0, 0, 1, 0, 0}));
  CHECK_THROWS(residual_line(p4("x2^2*x0"), line, {1, 0, 0, 0, 0}));
}

TEST_CASE("quadric rank") {
  CHECK(quadric_rank(p4("x0*x1 + x2*x3")) == 4);
  CHECK(quadric_rank(p4("x0^2 + x1^2 + x2^2 + x3^2 + x4^2")) == 5);
  CHECK(quadric_rank(p4("(x0 + x1)^2 - 3*x2*x3")) == 3);
  CHECK(quadric_rank(p4("x0^2 - 2*x0*x1 + x1^2")) == 1);
  CHECK_THROWS(quadric_rank(p4("x0^3")));
}

TEST_CASE("Cremona construction at a node of the Segre cubic") {
  const auto f = segre_p4();
  const Point p = segre_to_p4(segre_seed_node());
  const auto d = cremona_transform(f, p);
  CHECK_MESSAGE(d.checks.passed(), d.checks.to_table());
  CHECK(d.components.size() == 5);
  CHECK(d.components.back() == f);
  for (const auto& c : d.components) CHECK(c.degree() == 3);
  CHECK(quadric_rank(d.quadric) == 4);
  for (const auto& l : d.linear_forms) CHECK(l.evaluate(p) == 0);

  CHECK_THROWS(cremona_transform(f, {1, 0, 0, 0, -1}));
  CHECK_THROWS(cremona_transform(f, p, p4("x0^2")));
  // rank 4 but not singular at p
  CHECK_THROWS(cremona_transform(f, p, p4("x0*x1 + x2*x3")));
}

TEST_CASE("cubic files") {
  const auto c = parse_cubic_file(
      "# test\nvars: x0 x1 x2 x3 x4\nf: x0*x2^2 + x1*x3*x4\nnode: 1 0 0 0 0\nline: 1 0 0 0 0 | 0 1 0 0 0\n"
      "subspace: 1 0 0 0 0 | 0 1 0 0 0 | 0 0 0 1 0\n");
  CHECK(c.f.nvars() == 5);
  CHECK(c.nodes.size() == 1);
  CHECK(c.lines.size() == 1);
  CHECK(c.subspaces.size() == 1);
  CHECK(contains_subspace(c.f, c.subspaces[0]));
  CHECK_THROWS(parse_cubic_file("f: x^2\n"));
  CHECK_THROWS(parse_cubic_file("vars: x y z\n"));
  CHECK_THROWS(parse_cubic_file("f: x^3\nnode: 1 2\n"));
  CHECK_THROWS(parse_cubic_file("f: x^3 + y^3\nbogus: 1\n"));
  CHECK_THROWS(parse_cubic_file("f: x^3 + y^3 + z^3\nline: 1 0 0 | 2 0 0\n"));
}
