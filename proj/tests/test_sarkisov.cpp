#include <doctest.h>

#include "mukai/sarkisov.hpp"

using namespace mukai;
using namespace mukai::sarkisov;

TEST_CASE("surface models") {
  const auto dp5 = surface_from_plane_blowup({3, {1, 1, 1, 1}});
  CHECK(dp5 == SurfaceInvariants{5, 1, 5, 7, 0});
  const auto scroll = surface_from_plane_blowup({2, {1}});
  CHECK(scroll == SurfaceInvariants{3, 0, 8, 4, 0});
  const auto k3 = surface_from_blowup_model(BlownUpSurfaceModel::k3(10, 2, 1));
  CHECK(k3 == SurfaceInvariants{8, 6, -2, 26, 1});
  CHECK_THROWS(surface_from_plane_blowup({1, {1, 1}}));
  CHECK_THROWS(surface_from_plane_blowup({2, {0}}));
}

TEST_CASE("catalog surfaces satisfy 2pi - 2 = d + K.C and the double-point formula") {
  for (int g : catalog_genera()) {
    const auto c = catalog(g);
    for (const auto& s : {c.sigma, c.f})
      CHECK(2 * s.sectional_genus - 2 == s.degree + s.canonical_dot_section());
    CHECK(c.f.double_point_defect() == 2 * c.f.double_points);
    CHECK(c.sigma.holomorphic_euler_characteristic() == 1);
    CHECK(c.f.holomorphic_euler_characteristic() == (g == 6 ? 2 : 1));
  }
  CHECK_THROWS(catalog(10));
}

TEST_CASE("reverse tables") {
  const std::map<int, std::array<Int, 5>> expected = {
      {6, {1, 0, -8, -42, -150}}, {7, {1, 0, -7, -32, -84}}, {8, {1, 0, -7, -34, -114}}, {9, {1, 0, -6, -24, -48}}};
  for (int g : catalog_genera()) {
    CHECK(reverse_table(catalog(g)).monomials == expected.at(g));
    CHECK(computed_row(catalog(g)) == reference_row(g));
  }
}

TEST_CASE("c2(X).Sigma") {
  CHECK(solve_c2_dot_sigma(catalog(6)) == 7);
  CHECK(solve_c2_dot_sigma(catalog(7)) == 9);
  CHECK(solve_c2_dot_sigma(catalog(8)) == 14);
  CHECK(solve_c2_dot_sigma(catalog(9)) == 15);
  CHECK(schubert_c2_dot_sigma_genus8() == 14);
}

TEST_CASE("verification reports") {
  for (int g : catalog_genera()) {
    const auto c = catalog(g);
    const auto rev = verify_reverse(c);
    CHECK_MESSAGE(rev.passed(), rev.to_table());
    const auto fwd = verify_forward(c, std::nullopt);
    CHECK_MESSAGE(fwd.passed(), fwd.to_table());
  }
  CHECK(relations_roundtrip().passed());
  CHECK(table1_report().passed());
}

TEST_CASE("a wrong c2(X).Sigma is caught") {
  const auto r = verify_forward(catalog(8), Int{13});
  CHECK_FALSE(r.passed());
}

TEST_CASE("a wrong surface breaks the table") {
  auto c = catalog(7);
  c.f.double_points = 2;
  CHECK_FALSE(verify_reverse(c).passed());
}
