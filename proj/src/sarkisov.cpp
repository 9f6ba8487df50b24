#include "mukai/sarkisov.hpp"

#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mukai/schubert.hpp"

namespace mukai::sarkisov {

using blowup::BlowupTable;
using blowup::DivisorBasis;
using blowup::DivisorExpr;
using blowup::FourfoldAmbient;
using report::Source;

BlownUpSurfaceModel BlownUpSurfaceModel::plane(const PlaneBlowupModel& m, Int double_points) {
  BlownUpSurfaceModel b;
  b.base_h_squared = checked_mul(m.plane_degree, m.plane_degree);
  b.base_h_dot_canonical = checked_mul(-3, m.plane_degree);
  b.base_k_squared = 9;
  b.base_euler_number = 3;
  b.multiplicities = m.multiplicities;
  b.double_points = double_points;
  return b;
}

BlownUpSurfaceModel BlownUpSurfaceModel::k3(Int degree, int points, Int double_points) {
  BlownUpSurfaceModel b;
  b.base_h_squared = degree;
  b.base_h_dot_canonical = 0;
  b.base_k_squared = 0;
  b.base_euler_number = 24;
  b.multiplicities.assign(static_cast<std::size_t>(points), 1);
  b.double_points = double_points;
  return b;
}

SurfaceInvariants surface_from_blowup_model(const BlownUpSurfaceModel& m) {
  Int d = m.base_h_squared;
  Int kc = m.base_h_dot_canonical;
  for (Int mi : m.multiplicities) {
    if (mi <= 0) throw std::invalid_argument("surface model: multiplicities must be positive");
    d = checked_sub(d, checked_mul(mi, mi));
    kc = checked_add(kc, mi);
  }
  if (d <= 0) throw std::invalid_argument("surface model: H^2 = " + std::to_string(d) + " is not positive");
  const Int two_pi_minus_two = checked_add(d, kc);
  if (two_pi_minus_two % 2 != 0) throw std::invalid_argument("surface model: d + K.C must be even");
  const auto points = static_cast<Int>(m.multiplicities.size());
  SurfaceInvariants s;
  s.degree = d;
  s.sectional_genus = two_pi_minus_two / 2 + 1;
  s.k_squared = m.base_k_squared - points;
  s.euler_number = m.base_euler_number + points;
  s.double_points = m.double_points;
  return s;
}

SurfaceInvariants surface_from_plane_blowup(const PlaneBlowupModel& m) {
  return surface_from_blowup_model(BlownUpSurfaceModel::plane(m));
}

const std::vector<int>& catalog_genera() {
  static const std::vector<int> g = {6, 7, 8, 9};
  return g;
}

Table1Row reference_row(int genus) {
  switch (genus) {
    case 6: return {2, 0, 8, 6, 1, -2, 0, 3};
    case 7: return {3, 0, 7, 3, 3, -3, -1, 3};
    case 8: return {5, 1, 7, 4, 0, -5, -5, -3};
    case 9: return {6, 1, 6, 1, 3, -6, -6, -3};
    default: throw std::invalid_argument("no link in the catalog for genus " + std::to_string(genus));
  }
}

LinkCase catalog(int genus) {
  LinkCase c;
  c.genus = genus;
  c.expected = reference_row(genus);
  switch (genus) {
    case 6:
      c.sigma_name = "tau-quadric surface";
      c.sigma = {2, 0, 8, 4, 0};
      c.f_name = "degree-10 K3 projected from two of its points";
      c.f = surface_from_blowup_model(BlownUpSurfaceModel::k3(10, 2, 1));
      break;
    case 7:
      c.sigma_name = "cubic scroll surface";
      c.sigma = surface_from_plane_blowup({2, {1}});
      c.f_name = "P2 blown up in 9 points by 4L - sum E_i, projected from a point";
      c.f = surface_from_blowup_model(BlownUpSurfaceModel::plane({4, std::vector<Int>(9, 1)}, 3));
      break;
    case 8:
      c.sigma_name = "quintic del Pezzo surface";
      c.sigma = surface_from_plane_blowup({3, {1, 1, 1, 1}});
      c.f_name = "P2 blown up in 11 points by 6L - 2(E_1+..+E_6) - (E_7+..+E_11)";
      c.f = surface_from_plane_blowup({6, {2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1}});
      break;
    case 9:
      c.sigma_name = "sextic del Pezzo surface";
      c.sigma = surface_from_plane_blowup({3, {1, 1, 1}});
      c.f_name = "sextic del Pezzo projected from two points";
      c.f = surface_from_blowup_model(BlownUpSurfaceModel::plane({3, {1, 1, 1}}, 3));
      break;
    default: throw std::invalid_argument("no link in the catalog for genus " + std::to_string(genus));
  }
  return c;
}

BlowupTable reverse_table(const LinkCase& c) { return blowup::nodal_blowup_table(c.f); }

BlowupTable forward_table(const LinkCase& c, Int c2_dot_sigma) {
  const FourfoldAmbient x = FourfoldAmbient::mukai(c.genus);
  return blowup::smooth_blowup_table(x, c.sigma, blowup::CenterPairings::from_invariants(x, c.sigma, c2_dot_sigma),
                                     DivisorBasis::Contracted);
}

Int solve_c2_dot_sigma(const LinkCase& c) {
  // D⁴ = c₂(X)·Σ + K_X|Σ·K_Σ − c₂(Σ) − K_X²·Σ is affine in c₂(X)·Σ with slope 1.
  const Int at_zero = forward_table(c, 0).monomials[4];
  return checked_sub(c.expected.m04, at_zero);
}

Int schubert_c2_dot_sigma_genus8() {
  using schubert::ChowClassGr;
  const auto c = schubert::adjunct_linear_sections(6, 4);
  return schubert::pairing_on_section(6, 4, c[2], ChowClassGr::sigma(6, 1, 1));
}

namespace {

const DivisorExpr kPhiL = DivisorExpr::contracted(1, 0);
const DivisorExpr kD = DivisorExpr::contracted(0, 1);
const DivisorExpr kRhoH = DivisorExpr::pullback_h(1, 0);
const DivisorExpr kE = DivisorExpr::pullback_h(0, 1);

Int in4(const BlowupTable& t, const DivisorExpr& a, const DivisorExpr& b, const DivisorExpr& c, const DivisorExpr& d) {
  return blowup::intersection_number(t, a, b, c, d);
}

void contraction_checks(VerificationReport& r, const BlowupTable& t) {
  const DivisorExpr h = kPhiL - kD;
  const DivisorExpr e = kPhiL * 3 - kD * 4;
  r.expect("(phi*L-D)^4", 1, in4(t, h, h, h, h), Source::Reference);
  r.expect("(phi*L-D)^3.(3phi*L-4D)", 0, in4(t, h, h, h, e), Source::Reference);
  r.expect("(phi*L)^3.D", 0, in4(t, kPhiL, kPhiL, kPhiL, kD), Source::Reference);
}

void mixed_number_checks(VerificationReport& r, const BlowupTable& t, const Table1Row& expected) {
  r.expect("(phi*L)^2.D^2", expected.m22, in4(t, kPhiL, kPhiL, kD, kD), Source::Reference);
  r.expect("(phi*L).D^3", expected.m13, in4(t, kPhiL, kD, kD, kD), Source::Reference);
  r.expect("D^4", expected.m04, in4(t, kD, kD, kD, kD), Source::Reference);
}

std::string chi_string(const BlowupTable& t, const FourfoldAmbient& x, const DivisorExpr& d) {
  try {
    return std::to_string(blowup::riemann_roch_chi(t, x, d));
  } catch (const std::domain_error&) {
    std::ostringstream os;
    os << "non-integral (" << blowup::riemann_roch_bracket(t, d) << "/24)";
    return os.str();
  }
}

}  // namespace

Table1Row computed_row(const LinkCase& c) {
  const BlowupTable t = reverse_table(c);
  Table1Row row;
  row.m22 = in4(t, kPhiL, kPhiL, kD, kD);
  row.m13 = in4(t, kPhiL, kD, kD, kD);
  row.m04 = in4(t, kD, kD, kD, kD);
  // (φ*L)²D² = −d(Σ) and (φ*L)D³ = −K_Σ·C − 2d(Σ) on X_{2g−2}
  row.sigma_degree = -row.m22;
  const Int kc = checked_sub(checked_mul(-2, row.sigma_degree), row.m13);
  row.sigma_genus = checked_add(row.sigma_degree, kc) / 2 + 1;
  row.f_degree = -in4(t, kRhoH, kRhoH, kE, kE);
  row.f_genus = c.f.sectional_genus;
  row.f_singular = c.f.double_points;
  return row;
}

VerificationReport verify_reverse(const LinkCase& c) {
  VerificationReport r("link g=" + std::to_string(c.genus) + " reverse");
  const BlowupTable t = reverse_table(c);
  const FourfoldAmbient p4 = FourfoldAmbient::projective_space();
  const Int g = c.genus;

  r.expect("d(F) = -(rho*H)^2.E^2", c.expected.f_degree, -in4(t, kRhoH, kRhoH, kE, kE), Source::Reference);
  r.expect("pi(F)", c.expected.f_genus, c.f.sectional_genus, Source::Reference);
  r.expect("#Sing F", c.expected.f_singular, c.f.double_points, Source::Reference);
  r.expect("double-point formula (= 2 delta)", checked_mul(2, c.f.double_points), c.f.double_point_defect(),
           Source::Derived);
  r.expect("(rho*H)^3.E", 0, t.monomials[1], Source::Reference);

  const DivisorExpr quartics = kRhoH * 4 - kE;
  const DivisorExpr cubics = kRhoH * 3 - kE;
  r.expect("(4rho*H-E)^4 = 2g-2", 2 * g - 2, in4(t, quartics, quartics, quartics, quartics), Source::Reference);
  r.expect("(4rho*H-E)^3.(3rho*H-E)", 0, in4(t, quartics, quartics, quartics, cubics), Source::Reference);
  mixed_number_checks(r, t, c.expected);
  contraction_checks(r, t);

  const blowup::LinearInK slope = blowup::exceptional_slope_identity(t);
  r.expect("(4rho*H-E)^3.(3rho*H-kE) at k=1", "0", slope(mpq_class(1)).get_str(), Source::Reference);
  r.expect("(4rho*H-E)^3.(3rho*H-kE) constant", checked_mul(6, g - 1), slope.constant, Source::Derived,
           g == 8 ? "matches the published -42(k-1)"
                  : "published constant 42 holds for g=8 only; value here is 6(g-1)");
  r.expect("(4rho*H-E)^3.(3rho*H-kE) slope", checked_mul(-6, g - 1), slope.slope, Source::Derived);

  r.expect("chi(4rho*H-E) = g+3", std::to_string(g + 3), chi_string(t, p4, quartics), Source::Reference,
           "dim |4rho*H-E| = g+2");
  r.expect("chi(rho*H) = 5", "5", chi_string(t, p4, kRhoH), Source::Reference, "dim |phi*L-D| = 4");

  int integral = 0, total = 0;
  for (Int a = -10; a <= 10; ++a)
    for (Int b = -10; b <= 10; ++b, ++total)
      if (blowup::riemann_roch_bracket(t, DivisorExpr::pullback_h(a, b)) % 24 == 0) ++integral;
  r.expect("24 | RR bracket on [-10,10]^2", std::to_string(total) + "/" + std::to_string(total),
           std::to_string(integral) + "/" + std::to_string(total), Source::Derived);
  return r;
}

VerificationReport verify_forward(const LinkCase& c, std::optional<Int> c2_dot_sigma) {
  VerificationReport r("link g=" + std::to_string(c.genus) + " forward");
  const Int g = c.genus;
  Int c2 = 0;
  if (c2_dot_sigma) {
    c2 = *c2_dot_sigma;
    r.record("c2(X).Sigma", std::to_string(c2), "supplied");
  } else {
    c2 = solve_c2_dot_sigma(c);
    r.record("c2(X).Sigma", std::to_string(c2), "solved from the expected D^4");
  }
  if (g == 8)
    r.expect("c2(X14).Sigma via Schubert calculus", schubert_c2_dot_sigma_genus8(), c2, Source::Derived);

  const FourfoldAmbient x = FourfoldAmbient::mukai(c.genus);
  const BlowupTable t = forward_table(c, c2);
  r.expect("(phi*L)^4 = 2g-2", 2 * g - 2, in4(t, kPhiL, kPhiL, kPhiL, kPhiL), Source::Reference);
  r.expect("d(Sigma)", c.expected.sigma_degree, c.sigma.degree, Source::Reference);
  r.expect("pi(Sigma)", c.expected.sigma_genus, c.sigma.sectional_genus, Source::Reference);
  mixed_number_checks(r, t, c.expected);
  contraction_checks(r, t);
  r.expect("chi(phi*L) = g+3", std::to_string(g + 3), chi_string(t, x, kPhiL), Source::Derived);
  r.expect("chi(phi*L-D) = 5", "5", chi_string(t, x, kPhiL - kD), Source::Reference, "dim |phi*L-D| = 4");

  // both sides describe the same blowup: all pairings must agree after basis change
  const BlowupTable rev = reverse_table(c);
  bool same = true;
  const std::array<DivisorExpr, 2> basis = {kPhiL, kD};
  for (unsigned mask = 0; mask < 16; ++mask) {
    const auto& a = basis[mask & 1];
    const auto& b = basis[(mask >> 1) & 1];
    const auto& cc = basis[(mask >> 2) & 1];
    const auto& d = basis[(mask >> 3) & 1];
    same = same && in4(t, a, b, cc, d) == in4(rev, a, b, cc, d);
  }
  for (const auto& a : basis) {
    same = same && blowup::c1c2_pairing(t, a) == blowup::c1c2_pairing(rev, a);
    for (const auto& b : basis) same = same && blowup::c2_pairing(t, a, b) == blowup::c2_pairing(rev, a, b);
  }
  r.expect_true("forward and reverse tables agree", same, Source::Derived);
  return r;
}

VerificationReport relations_roundtrip() {
  VerificationReport r("relations");
  const auto b = DivisorBasis::PullbackExceptional;
  r.expect("phi*L-D", kRhoH.to_string(), (kPhiL - kD).in_basis(b).to_string(), Source::Reference);
  r.expect("3phi*L-4D", kE.to_string(), (kPhiL * 3 - kD * 4).in_basis(b).to_string(), Source::Reference);
  r.expect("phi*L", DivisorExpr::pullback_h(4, -1).to_string(), kPhiL.in_basis(b).to_string(), Source::Reference);
  r.expect("D", DivisorExpr::pullback_h(3, -1).to_string(), kD.in_basis(b).to_string(), Source::Reference);

  std::mt19937_64 rng(20211);
  std::uniform_int_distribution<Int> dist(-1000, 1000);
  int ok = 0;
  const int trials = 100;
  for (int i = 0; i < trials; ++i) {
    const DivisorExpr v = DivisorExpr::pullback_h(dist(rng), dist(rng));
    const DivisorExpr w = v.in_basis(DivisorBasis::Contracted).in_basis(b);
    const DivisorExpr u = DivisorExpr::contracted(dist(rng), dist(rng));
    const DivisorExpr z = u.in_basis(b).in_basis(DivisorBasis::Contracted);
    if (w.first() == v.first() && w.second() == v.second() && z.first() == u.first() && z.second() == u.second()) ++ok;
  }
  r.expect("round trip on random pairs", std::to_string(trials) + "/" + std::to_string(trials),
           std::to_string(ok) + "/" + std::to_string(trials), Source::Derived);
  return r;
}

VerificationReport table1_report() {
  VerificationReport r("table1");
  for (int g : catalog_genera()) {
    const LinkCase c = catalog(g);
    const Table1Row row = computed_row(c);
    const Table1Row& e = c.expected;
    const std::string p = "g=" + std::to_string(g) + " ";
    r.expect(p + "d(Sigma)", e.sigma_degree, row.sigma_degree, Source::Reference);
    r.expect(p + "pi(Sigma)", e.sigma_genus, row.sigma_genus, Source::Reference);
    r.expect(p + "d(F)", e.f_degree, row.f_degree, Source::Reference);
    r.expect(p + "pi(F)", e.f_genus, row.f_genus, Source::Reference);
    r.expect(p + "#Sing F", e.f_singular, row.f_singular, Source::Reference);
    r.expect(p + "(phi*L)^2.D^2", e.m22, row.m22, Source::Reference);
    r.expect(p + "(phi*L).D^3", e.m13, row.m13, Source::Reference);
    r.expect(p + "D^4", e.m04, row.m04, Source::Reference);
  }
  return r;
}

std::string format_table1(const std::vector<std::pair<int, Table1Row>>& rows) {
  std::ostringstream os;
  os << " g | d(Sigma) | pi(Sigma) | d(F) | pi(F) | #Sing F | (phi*L)^2.D^2 | (phi*L).D^3 | D^4\n";
  for (const auto& [g, r] : rows) {
    os << std::setw(2) << g << " | " << std::setw(8) << r.sigma_degree << " | " << std::setw(9) << r.sigma_genus
       << " | " << std::setw(4) << r.f_degree << " | " << std::setw(5) << r.f_genus << " | " << std::setw(7)
       << r.f_singular << " | " << std::setw(13) << r.m22 << " | " << std::setw(11) << r.m13 << " | "
       << std::setw(3) << r.m04 << "\n";
  }
  return os.str();
}

}  // namespace mukai::sarkisov
