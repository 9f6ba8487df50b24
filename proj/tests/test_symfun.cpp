#include <doctest.h>

#include "mukai/graded_poly.hpp"
#include "mukai/symfun.hpp"

using namespace mukai;
using namespace mukai::symfun;

namespace {

// c(A ⊗ B) by brute force over explicit Chern roots
GradedPoly tensor_from_roots(int ra, int rb, int top) {
  std::vector<std::string> names;
  for (int i = 0; i < ra; ++i) names.push_back("y" + std::to_string(i));
  for (int j = 0; j < rb; ++j) names.push_back("q" + std::to_string(j));
  auto ring = GradedRing::make(names, std::vector<int>(names.size(), 1));
  GradedPoly p = GradedPoly::constant(ring, 1);
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < rb; ++j)
      p = p.multiply_truncated(GradedPoly::constant(ring, 1) + GradedPoly::generator(ring, i) +
                                   GradedPoly::generator(ring, ra + j),
                               top);
  return p;
}

}  // namespace

TEST_CASE("elementary symmetric rewriting") {
  auto ring = GradedRing::make({"x", "y", "e1", "e2"}, {1, 1, 1, 2});
  const auto x = GradedPoly::generator(ring, 0), y = GradedPoly::generator(ring, 1);
  const auto e1 = GradedPoly::generator(ring, 2), e2 = GradedPoly::generator(ring, 3);
  CHECK(rewrite_in_elementary(x * x + y * y, {0, 1}, {2, 3}, 4) == e1 * e1 - e2 * 2);
  CHECK(rewrite_in_elementary(x * x * y + x * y * y, {0, 1}, {2, 3}, 4) == e1 * e2);
  CHECK(elementary_symmetric(ring, {0, 1}, 2) == x * y);
  CHECK_THROWS_AS(rewrite_in_elementary(x, {0, 1}, {2, 3}, 4), std::domain_error);
}

TEST_CASE("tensor of line bundles") {
  auto ring = GradedRing::make({"x", "y"}, {1, 1});
  const auto x = GradedPoly::generator(ring, 0), y = GradedPoly::generator(ring, 1);
  const auto a = ChernVector<GradedPoly>::line_bundle(x, 3);
  const auto b = ChernVector<GradedPoly>::line_bundle(y, 3);
  const auto t = tensor_chern(a, b);
  CHECK(t.rank() == 1);
  CHECK(t[1] == x + y);
  CHECK(t[2].is_zero());
  const auto s = whitney_sum(a, b);
  CHECK(s.rank() == 2);
  CHECK(s.total() == x.one() + x + y + x * y);
}

TEST_CASE("universal tensor polynomial agrees with Chern roots") {
  for (auto [ra, rb] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{1, 4}}) {
    const int top = 5;
    const GradedPoly u = universal_tensor_polynomial(ra, rb, top);
    // substitute e_k, f_k by the elementary symmetric functions of the roots
    const GradedPoly roots = tensor_from_roots(ra, rb, top);
    auto ring = roots.ring();
    std::vector<std::size_t> ys, qs;
    for (int i = 0; i < ra; ++i) ys.push_back(static_cast<std::size_t>(i));
    for (int j = 0; j < rb; ++j) qs.push_back(static_cast<std::size_t>(ra + j));
    std::vector<GradedPoly> ea = {roots.one()}, fb = {roots.one()};
    for (int k = 1; k <= ra; ++k) ea.push_back(elementary_symmetric(ring, ys, k));
    for (int k = 1; k <= rb; ++k) fb.push_back(elementary_symmetric(ring, qs, k));
    const ChernVector<GradedPoly> a(ra, [&] {
      std::vector<GradedPoly> v(ea);
      while (static_cast<int>(v.size()) <= top) v.push_back(roots.zero());
      return v;
    }());
    const ChernVector<GradedPoly> b(rb, [&] {
      std::vector<GradedPoly> v(fb);
      while (static_cast<int>(v.size()) <= top) v.push_back(roots.zero());
      return v;
    }());
    const auto t = substitute_classes(u, a, b, ra, rb, ra * rb);
    CHECK_MESSAGE(t.total() == roots, "ranks " << ra << "," << rb);
  }
}

TEST_CASE("inverse of a total class") {
  auto ring = GradedRing::make({"h"}, {1});
  const auto h = GradedPoly::generator(ring, 0);
  const auto l = ChernVector<GradedPoly>::line_bundle(h, 4);
  const auto inv = invert_total_class(l);
  CHECK(inv.rank() == -1);
  CHECK(whitney_sum(l, inv).total() == h.one());
  CHECK(inv[3] == h * h * h * -1);
  CHECK(power(l, -2)[2] == h * h * 3);
  CHECK_THROWS(tensor_chern(inv, l));
}

TEST_CASE("whitney sum rejects mismatched truncation") {
  auto ring = GradedRing::make({"h"}, {1});
  const auto h = GradedPoly::generator(ring, 0);
  CHECK_THROWS_AS(whitney_sum(ChernVector<GradedPoly>::line_bundle(h, 2), ChernVector<GradedPoly>::line_bundle(h, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(ChernVector<GradedPoly>(1, {h}), std::invalid_argument);
}
