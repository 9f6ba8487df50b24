#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "mukai/schubert.hpp"
#include "mukai/triangle.hpp"
#include "oracle/schur_oracle.hpp"

using namespace mukai;
using namespace mukai::schubert;

namespace {

oracle::Classes as_classes(const ChowClassGr& c) {
  oracle::Classes out;
  for (const auto& [idx, v] : c.terms()) out[{idx.a, idx.b}] = v;
  return out;
}

Triangle golden(const std::string& name) {
  std::ifstream in(std::string(MUKAI_TEST_DATA) + "/golden/" + name);
  REQUIRE(in.good());
  return parse_triangle(in);
}

}  // namespace

TEST_CASE("Pieri and Giambelli agree with Schur polynomial products") {
  for (int n = 3; n <= 7; ++n) {
    const int m = n - 2;
    for (int a = 0; a <= m; ++a)
      for (int b = 0; b <= a; ++b)
        for (int c = 0; c <= m; ++c)
          for (int d = 0; d <= c; ++d) {
            const auto got = multiply(ChowClassGr::sigma(n, a, b), ChowClassGr::sigma(n, c, d));
            CHECK_MESSAGE(as_classes(got) == oracle::product(n, {a, b}, {c, d}),
                          "n=" << n << " s[" << a << "," << b << "]*s[" << c << "," << d << "]");
          }
  }
}

TEST_CASE("Pieri examples") {
  CHECK(pieri_multiply(ChowClassGr::sigma(6, 1), 1) == ChowClassGr::sigma(6, 2) + ChowClassGr::sigma(6, 1, 1));
  CHECK(pieri_multiply(ChowClassGr::sigma(6, 4, 3), 1) == ChowClassGr::sigma(6, 4, 4));
  CHECK(pieri_multiply(ChowClassGr::sigma(6, 4, 4), 1).is_zero());
  CHECK(integrate(ChowClassGr::sigma(6, 1).pow(8)) == 14);
  CHECK(integrate(ChowClassGr::sigma(5, 1).pow(6)) == 5);
  CHECK_THROWS(ChowClassGr::sigma(6, 5));
  CHECK_THROWS(ChowClassGr::sigma(6, 1, 2));
}

TEST_CASE("Chern classes of Gr(2,n) match the Chern-root oracle") {
  for (int n = 3; n <= 8; ++n) CHECK_MESSAGE(as_classes(tangent_chern(n).total()) == oracle::tangent(n), "n=" << n);
  for (int n = 4; n <= 7; ++n)
    for (int k = 0; k <= 2 * (n - 2); ++k)
      CHECK_MESSAGE(as_classes(adjunct_linear_sections(n, k).total()) == oracle::section(n, k), "n=" << n << " k=" << k);
}

TEST_CASE("golden triangles") {
  CHECK(to_triangle(tangent_chern(6).total()) == golden("gr26_chern.txt"));
  CHECK(to_triangle(adjunct_linear_sections(6, 4).total()) == golden("x14_chern.txt"));
}

TEST_CASE("Euler numbers") {
  for (int n = 3; n <= 8; ++n) CHECK(integrate(tangent_chern(n)[2 * (n - 2)]) == n * (n - 1) / 2);
  CHECK(euler_characteristic_section(6, 4) == 12);
  CHECK(euler_characteristic_section(6, 0) == 15);
  CHECK(euler_characteristic_section(5, 0) == 10);
  for (int n = 4; n <= 7; ++n)
    for (int k = 0; k <= 2 * (n - 2); ++k) {
      const auto s = oracle::section(n, k);
      const int top = 2 * (n - 2) - k;
      // oracle: c_top of the section times σ1^k
      oracle::Classes ctop;
      for (const auto& [idx, v] : s)
        if (idx.first + idx.second == top) ctop[idx] = v;
      ChowClassGr c(n);
      for (const auto& [idx, v] : ctop) c.add({idx.first, idx.second}, v);
      CHECK(euler_characteristic_section(n, k) == integrate(multiply(c, ChowClassGr::sigma(n, 1).pow(k))));
    }
}

TEST_CASE("pairings on X14") {
  const auto s11 = ChowClassGr::sigma(6, 1, 1), s2 = ChowClassGr::sigma(6, 2);
  CHECK(pairing_on_section(6, 4, s11, s11) == 2);
  CHECK(pairing_on_section(6, 4, s11, s2) == 3);
  // oracle: s2^2 s1^4 as a product of Schur polynomials
  oracle::Poly2 p = oracle::mul(oracle::schur(2, 0), oracle::schur(2, 0), 8);
  for (int i = 0; i < 4; ++i) p = oracle::mul(p, oracle::schur(1, 0), 8);
  const Int s2s2 = oracle::integrate(oracle::decompose(p, 6), 6);
  CHECK(pairing_on_section(6, 4, s2, s2) == s2s2);
  CHECK(pairing_on_section(6, 4, adjunct_linear_sections(6, 4)[2], s11) == 14);
  CHECK(gram_matrix_on_section(6, 4, {s2, s11}) == std::vector<std::vector<Int>>{{s2s2, 3}, {3, 2}});
  CHECK_THROWS(pairing_on_section(6, 4, s11, ChowClassGr::sigma(6, 1)));
}

TEST_CASE("Poincare duality") {
  for (int n = 3; n <= 7; ++n) {
    const int m = n - 2;
    for (int a = 0; a <= m; ++a)
      for (int b = 0; b <= a; ++b)
        for (int c = 0; c <= m; ++c)
          for (int d = 0; d <= c; ++d) {
            if (a + b + c + d != 2 * m) continue;
            const Int expected = (c == m - b && d == m - a) ? 1 : 0;
            CHECK(integrate(multiply(ChowClassGr::sigma(n, a, b), ChowClassGr::sigma(n, c, d))) == expected);
          }
  }
}

TEST_CASE("class printing") {
  CHECK((ChowClassGr::sigma(6, 4, 2) * 3 + ChowClassGr::sigma(6, 3, 3) * 2).to_string() == "3*s[4,2] + 2*s[3,3]");
  CHECK(ChowClassGr(6).to_string() == "0");
}
