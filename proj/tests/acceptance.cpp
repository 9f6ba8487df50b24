// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mukai/blowup.hpp"
#include "mukai/cubics.hpp"
#include "mukai/sarkisov.hpp"
#include "mukai/schubert.hpp"
#include "mukai/triangle.hpp"

using namespace mukai;
using schubert::ChowClassGr;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

using Criterion = std::function<Outcome()>;

Outcome schubert_golden() {
  Outcome o;
  const schubert::Triangle gr = {{1}, {6, 18}, {16, 58, 67}, {26, 91, 120, 65}, {31, 90, 105, 60, 15}};
  const schubert::Triangle x14 = {{1}, {2, 4}, {2, 2, 5}, {2, 0, -2, 5}, {2, -2, 7, -18, 27}};
  o.require(schubert::to_triangle(schubert::tangent_chern(6).total()) == gr, "c(Gr(2,6)) triangle");
  o.require(schubert::to_triangle(schubert::adjunct_linear_sections(6, 4).total()) == x14, "c(X14) triangle");
  return o;
}

Outcome euler_numbers() {
  Outcome o;
  const auto s1 = ChowClassGr::sigma(6, 1);
  const auto c4 = ChowClassGr::sigma(6, 4) * 2 + ChowClassGr::sigma(6, 2, 2) * 5;
  o.require(schubert::integrate(schubert::multiply(c4, s1.pow(4))) == 12, "int (2s4+5s22) s1^4 = 12");
  o.require(schubert::euler_characteristic_section(6, 4) == 12, "chi(X14) = 12");
  o.require(schubert::integrate(s1.pow(8)) == 14, "int s1^8 = 14");
  o.require(schubert::integrate(schubert::tangent_chern(6)[8]) == 15, "e(Gr(2,6)) = 15");
  o.require(schubert::integrate(schubert::tangent_chern(5)[6]) == 10, "e(Gr(2,5)) = 10");
  return o;
}

const blowup::DivisorExpr kPhiL = blowup::DivisorExpr::contracted(1, 0);
const blowup::DivisorExpr kD = blowup::DivisorExpr::contracted(0, 1);
const blowup::DivisorExpr kH = blowup::DivisorExpr::pullback_h(1, 0);
const blowup::DivisorExpr kE = blowup::DivisorExpr::pullback_h(0, 1);

Int in4(const blowup::BlowupTable& t, const blowup::DivisorExpr& a, const blowup::DivisorExpr& b,
        const blowup::DivisorExpr& c, const blowup::DivisorExpr& d) {
  return blowup::intersection_number(t, a, b, c, d);
}

Outcome table1_reverse() {
  Outcome o;
  const std::map<int, std::array<Int, 4>> expected = {
      {6, {-2, 0, 3, 10}}, {7, {-3, -1, 3, 12}}, {8, {-5, -5, -3, 14}}, {9, {-6, -6, -3, 16}}};
  for (const auto& [g, e] : expected) {
    const auto t = blowup::nodal_blowup_table(sarkisov::catalog(g).f);
    const auto q = kH * 4 - kE;
    const std::array<Int, 4> got = {in4(t, kPhiL, kPhiL, kD, kD), in4(t, kPhiL, kD, kD, kD), in4(t, kD, kD, kD, kD),
                                    in4(t, q, q, q, q)};
    o.require(got == e, "g=" + std::to_string(g) + " mixed numbers");
    o.require(sarkisov::verify_reverse(sarkisov::catalog(g)).passed(), "g=" + std::to_string(g) + " reverse report");
  }
  return o;
}

Outcome table1_forward() {
  Outcome o;
  const Int c2 = sarkisov::schubert_c2_dot_sigma_genus8();
  o.require(c2 == 14, "c2(X14).Sigma = 14");
  const auto c8 = sarkisov::catalog(8);
  const auto t8 = sarkisov::forward_table(c8, c2);
  o.require(in4(t8, kPhiL, kPhiL, kD, kD) == -5 && in4(t8, kPhiL, kD, kD, kD) == -5 && in4(t8, kD, kD, kD, kD) == -3,
            "g=8 forward row");
  o.require(sarkisov::verify_forward(c8, c2).passed(), "g=8 forward report");
  const std::map<int, Int> solved = {{6, 7}, {7, 9}, {9, 15}};
  for (const auto& [g, v] : solved) {
    const auto c = sarkisov::catalog(g);
    o.require(sarkisov::solve_c2_dot_sigma(c) == v, "g=" + std::to_string(g) + " solved c2.Sigma");
    const auto t = sarkisov::forward_table(c, v);
    o.require(in4(t, kPhiL, kPhiL, kD, kD) == c.expected.m22 && in4(t, kPhiL, kD, kD, kD) == c.expected.m13 &&
                  in4(t, kD, kD, kD, kD) == c.expected.m04,
              "g=" + std::to_string(g) + " forward row");
  }
  return o;
}

Outcome riemann_roch() {
  Outcome o;
  const auto p4 = blowup::FourfoldAmbient::projective_space();
  for (int g : sarkisov::catalog_genera()) {
    const auto t = sarkisov::reverse_table(sarkisov::catalog(g));
    try {
      o.require(blowup::riemann_roch_chi(t, p4, kH * 4 - kE) == g + 3, "chi(4H-E) = g+3 at g=" + std::to_string(g));
      o.require(blowup::riemann_roch_chi(t, p4, kH) == 5, "chi(H) = 5 at g=" + std::to_string(g));
    } catch (const std::domain_error& e) {
      o.require(false, e.what());
    }
    for (Int a = -10; a <= 10; ++a)
      for (Int b = -10; b <= 10; ++b)
        o.require(blowup::riemann_roch_bracket(t, blowup::DivisorExpr::pullback_h(a, b)) % 24 == 0,
                  "24 | bracket at g=" + std::to_string(g));
  }
  return o;
}

Outcome contraction() {
  Outcome o;
  for (int g : sarkisov::catalog_genera()) {
    const auto t = sarkisov::reverse_table(sarkisov::catalog(g));
    const auto h = kPhiL - kD, e = kPhiL * 3 - kD * 4;
    o.require(in4(t, h, h, h, h) == 1, "(phi*L-D)^4 = 1");
    o.require(in4(t, h, h, h, e) == 0, "(phi*L-D)^3(3phi*L-4D) = 0");
    o.require(in4(t, kPhiL, kPhiL, kPhiL, kD) == 0, "(phi*L)^3 D = 0");
  }
  return o;
}

Outcome slope_identity() {
  Outcome o;
  std::ostringstream constants;
  for (int g : sarkisov::catalog_genera()) {
    const auto s = blowup::exceptional_slope_identity(sarkisov::reverse_table(sarkisov::catalog(g)));
    o.require(s(mpq_class(1)) == 0, "vanishing at k=1");
    o.require(s.constant == 6 * (g - 1) && s.slope == -s.constant, "constant 6(g-1)");
    if (g == 8) o.require(s.constant == 42, "g=8 constant 42");
    constants << (g == 6 ? "" : ",") << s.constant;
  }
  o.detail = o.ok ? "constants " + constants.str() : o.detail;
  return o;
}

Outcome segre() {
  Outcome o;
  const auto eqs = cubics::segre_p5();
  const auto f = cubics::segre_p4();
  const auto gens = cubics::symmetric_group_generators(6);
  const auto nodes = cubics::orbit_closure(cubics::segre_seed_node(), gens);
  o.require(nodes.size() == 10, "10 orbit points");
  for (const auto& p : nodes) {
    o.require(cubics::singular_on_intersection(eqs, p), "singular");
    o.require(cubics::is_node(f, cubics::segre_to_p4(p)), "Hessian rank 4");
  }
  const auto planes = cubics::orbit_closure(cubics::segre_seed_plane(), gens);
  o.require(planes.size() == 15, "15 orbit planes");
  for (const auto& l : planes) o.require(cubics::contains_subspace(eqs[1], l) && cubics::contains_subspace(eqs[0], l), "plane contained");
  return o;
}

Outcome nine_nodal() {
  Outcome o;
  const auto z = cubics::nine_nodal_fourfold();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      o.require(cubics::singular_along(z, cubics::nine_nodal_line(i, j)), "l_ij singular");
      o.require(cubics::contains_subspace(z, cubics::nine_nodal_space(i, j)), "M_ij contained");
    }
  return o;
}

Outcome cylinder_ingredients() {
  Outcome o;
  const auto z = cubics::nine_nodal_fourfold();
  const auto sec = cubics::hyperplane_section(z, cubics::default_line_hyperplane());
  const auto line = sec.to_section(cubics::nine_nodal_line(1, 1));
  o.require(cubics::singular_along(sec.restricted, line), "section singular along the line");
  const auto r = cubics::residual_line_parametric(sec.restricted, line);
  const auto u2 = poly::MultiPoly::variable(r.restricted.variables(), 2).pow(2);
  o.require(r.exact && r.remainder.is_zero() && u2 * r.residual == r.restricted, "f|Pi = u^2 L identity");
  o.require(r.residual.degree_in({0, 1, 2}) == 1 && r.residual.order_in({0, 1, 2}) == 1, "L linear in the plane");
  const auto d = cubics::cremona_transform(cubics::segre_p4(), cubics::segre_to_p4(cubics::segre_seed_node()));
  o.require(d.checks.passed(), "Cremona checks");
  return o;
}

Outcome property_suites() {
  Outcome o;
  for (int n = 2; n <= 7; ++n) {
    const int m = n - 2;
    for (int a = 0; a <= m; ++a)
      for (int b = 0; b <= a; ++b)
        for (int c = 0; c <= m; ++c)
          for (int d = 0; d <= c; ++d)
            if (a + b + c + d == 2 * m)
              o.require(schubert::integrate(schubert::multiply(ChowClassGr::sigma(n, a, b), ChowClassGr::sigma(n, c, d))) ==
                            ((c == m - b && d == m - a) ? 1 : 0),
                        "Poincare duality n=" + std::to_string(n));
  }

  std::mt19937_64 rng(2024);
  auto random_class = [&](int n) {
    std::uniform_int_distribution<int> coef(-3, 3), part(0, n - 2);
    ChowClassGr x(n);
    for (int k = 0; k < 3; ++k) {
      int a = part(rng), b = part(rng);
      if (a < b) std::swap(a, b);
      x.add({a, b}, coef(rng));
    }
    return x;
  };
  std::uniform_int_distribution<int> nd(3, 7);
  for (int i = 0; i < 100; ++i) {
    const int n = nd(rng);
    const auto x = random_class(n), y = random_class(n), z = random_class(n);
    o.require(schubert::multiply(schubert::multiply(x, y), z) == schubert::multiply(x, schubert::multiply(y, z)),
              "associativity");
    o.require(schubert::multiply(x, y) == schubert::multiply(y, x), "commutativity");
  }

  std::uniform_int_distribution<Int> coef(-6, 6);
  std::uniform_int_distribution<int> pick(6, 9);
  auto rd = [&] { return blowup::DivisorExpr::pullback_h(coef(rng), coef(rng)); };
  for (int i = 0; i < 100; ++i) {
    const auto t = sarkisov::reverse_table(sarkisov::catalog(pick(rng)));
    const auto a = rd(), a2 = rd(), b = rd(), c = rd(), d = rd();
    const Int s = coef(rng);
    o.require(in4(t, a + a2 * s, b, c, d) == in4(t, a, b, c, d) + s * in4(t, a2, b, c, d), "linearity");
    o.require(in4(t, a, b, c, d) == in4(t, d, c, a, b), "symmetry");
    o.require(in4(t, a.in_basis(blowup::DivisorBasis::Contracted), b, c, d) == in4(t, a, b, c, d), "basis independence");
  }

  const std::vector<std::string> vars = poly::MultiPoly::numbered("x", 0, 5);
  std::uniform_int_distribution<int> small(-4, 4);
  for (int i = 0; i < 20; ++i) {
    poly::MultiPoly g(vars);
    const int terms = 1 + i % 5;
    for (int k = 0; k < terms; ++k) {
      poly::Point l(5);
      for (auto& x : l) x = small(rng);
      g += poly::MultiPoly::linear(vars, l) * poly::MultiPoly::linear(vars, l) * mpq_class(small(rng));
    }
    linalg::Matrix a(5, 5);
    do {
      for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c) a(r, c) = small(rng);
    } while (linalg::rank(a) < 5);
    std::vector<poly::MultiPoly> images;
    for (std::size_t r = 0; r < 5; ++r) images.push_back(poly::MultiPoly::linear(vars, a.row(r)));
    const auto h = g.substitute(images);
    o.require(h.is_zero() == g.is_zero(), "invertible change keeps zero");
    if (!g.is_zero()) o.require(cubics::quadric_rank(h) == cubics::quadric_rank(g), "quadric rank invariance");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria = {
      {"Schubert golden tables", schubert_golden},
      {"Euler characteristic of X14 and cell counts", euler_numbers},
      {"link invariants, reverse direction", table1_reverse},
      {"link invariants, forward direction", table1_forward},
      {"Riemann-Roch dimension counts", riemann_roch},
      {"contraction criteria", contraction},
      {"exceptional-slope identity", slope_identity},
      {"Segre cubic nodes and planes", segre},
      {"nine-nodal configuration", nine_nodal},
      {"cylinder ingredients", cylinder_ingredients},
      {"property suites", property_suites},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << std::setw(2) << i + 1 << ". " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed in " << secs << " s\n";
  return failed == 0 ? 0 : 1;
}
