#include "mukai/blowup.hpp"

#include <sstream>
#include <stdexcept>

namespace mukai::blowup {

Int SurfaceInvariants::holomorphic_euler_characteristic() const {
  Int s = checked_add(k_squared, euler_number);
  if (s % 12 != 0) throw std::domain_error("SurfaceInvariants: K^2 + c2 is not divisible by 12");
  return s / 12;
}

Int SurfaceInvariants::double_point_defect() const {
  const Int kc = canonical_dot_section();
  Int v = checked_mul(degree, degree);
  v = checked_sub(v, checked_mul(10, degree));
  v = checked_sub(v, checked_mul(5, kc));
  v = checked_sub(v, checked_mul(2, k_squared));
  return checked_add(v, checked_mul(12, holomorphic_euler_characteristic()));
}

FourfoldAmbient FourfoldAmbient::projective_space() { return {1, 5, 10, 1}; }

FourfoldAmbient FourfoldAmbient::mukai(int genus) {
  if (genus < 2) throw std::invalid_argument("FourfoldAmbient::mukai: genus must be >= 2");
  return {2 * genus - 2, 2, 2 * genus + 22, 1};
}

CenterPairings CenterPairings::from_invariants(const FourfoldAmbient& x, const SurfaceInvariants& s,
                                               Int c2_dot_surface) {
  const Int kc = s.canonical_dot_section();
  CenterPairings p;
  p.surface_dot_h2 = s.degree;
  p.h_dot_canonical_s = kc;
  p.canonical_x_dot_h = checked_mul(-x.index, s.degree);
  p.canonical_x_dot_canonical_s = checked_mul(-x.index, kc);
  p.canonical_x_squared = checked_mul(checked_mul(x.index, x.index), s.degree);
  p.c2_dot_surface = c2_dot_surface;
  return p;
}

std::string to_string(DivisorBasis b) {
  return b == DivisorBasis::PullbackExceptional ? "(rho*H,E)" : "(phi*L,D)";
}

DivisorExpr DivisorExpr::in_basis(DivisorBasis target) const {
  if (target == basis_) return *this;
  if (basis_ == DivisorBasis::PullbackExceptional) {
    // ρ*H = φ*L − D, E = 3φ*L − 4D
    return {target, checked_add(first_, checked_mul(3, second_)),
            checked_sub(checked_sub(0, first_), checked_mul(4, second_))};
  }
  // φ*L = 4ρ*H − E, D = 3ρ*H − E
  return {target, checked_add(checked_mul(4, first_), checked_mul(3, second_)),
          checked_sub(checked_sub(0, first_), second_)};
}

DivisorExpr DivisorExpr::operator+(const DivisorExpr& o) const {
  DivisorExpr v = o.in_basis(basis_);
  return {basis_, checked_add(first_, v.first_), checked_add(second_, v.second_)};
}

DivisorExpr DivisorExpr::operator-(const DivisorExpr& o) const { return *this + o * Int{-1}; }

DivisorExpr DivisorExpr::operator*(Int c) const { return {basis_, checked_mul(first_, c), checked_mul(second_, c)}; }

bool DivisorExpr::operator==(const DivisorExpr& o) const {
  DivisorExpr v = o.in_basis(basis_);
  return first_ == v.first_ && second_ == v.second_;
}

std::string DivisorExpr::to_string() const {
  std::ostringstream os;
  const char* names[2][2] = {{"rho*H", "E"}, {"phi*L", "D"}};
  const int row = basis_ == DivisorBasis::PullbackExceptional ? 0 : 1;
  os << first_ << "*" << names[row][0] << (second_ < 0 ? " - " : " + ") << (second_ < 0 ? -second_ : second_) << "*"
     << names[row][1];
  return os.str();
}

namespace {

void fill_chern_pairings(BlowupTable& t, const FourfoldAmbient& x, const SurfaceInvariants& s,
                         const CenterPairings& p) {
  t.c2_hh = checked_add(x.c2_dot_h2, p.surface_dot_h2);
  t.c2_he = checked_sub(0, p.canonical_x_dot_h);
  // c₂(X̃)·E² = −c₂(X)·S − c₂(N) − K_X|_S·K_S + K_X²·S with
  // c₂(N) = c₂(X)·S − c₂(S) + K_S² − K_S·K_X|_S.
  Int ee = checked_mul(-2, p.c2_dot_surface);
  ee = checked_add(ee, s.euler_number);
  ee = checked_sub(ee, s.k_squared);
  t.c2_ee = checked_add(ee, p.canonical_x_squared);
  t.c1c2_h = checked_sub(checked_mul(t.index, t.c2_hh), t.c2_he);
  t.c1c2_e = checked_sub(checked_mul(t.index, t.c2_he), t.c2_ee);
}

}  // namespace

BlowupTable smooth_blowup_table(const FourfoldAmbient& x, const SurfaceInvariants& s, const CenterPairings& p,
                                DivisorBasis native) {
  if (s.double_points != 0) throw std::invalid_argument("smooth_blowup_table: centre must be smooth (delta = 0)");
  BlowupTable t;
  t.native = native;
  t.index = x.index;
  t.monomials[0] = x.degree;
  t.monomials[1] = 0;
  t.monomials[2] = checked_sub(0, p.surface_dot_h2);
  t.monomials[3] = checked_add(checked_sub(0, p.h_dot_canonical_s), p.canonical_x_dot_h);
  Int e4 = checked_add(p.c2_dot_surface, p.canonical_x_dot_canonical_s);
  e4 = checked_sub(e4, s.euler_number);
  t.monomials[4] = checked_sub(e4, p.canonical_x_squared);
  fill_chern_pairings(t, x, s, p);
  return t;
}

BlowupTable nodal_blowup_table(const SurfaceInvariants& s) {
  if (s.degree < 1) throw std::invalid_argument("nodal_blowup_table: degree must be positive");
  if (s.double_points < 0) throw std::invalid_argument("nodal_blowup_table: negative number of double points");
  const FourfoldAmbient p4 = FourfoldAmbient::projective_space();
  const CenterPairings p = CenterPairings::from_invariants(p4, s, checked_mul(10, s.degree));
  const Int d = s.degree;
  const Int kc = s.canonical_dot_section();
  BlowupTable t;
  t.native = DivisorBasis::PullbackExceptional;
  t.index = p4.index;
  t.monomials[0] = 1;
  t.monomials[1] = 0;
  t.monomials[2] = -d;
  t.monomials[3] = checked_sub(checked_mul(-5, d), kc);
  Int e4 = checked_sub(checked_mul(d, d), checked_mul(25, d));
  e4 = checked_sub(e4, checked_mul(10, kc));
  e4 = checked_sub(e4, s.k_squared);
  t.monomials[4] = checked_add(e4, checked_mul(4, s.double_points));
  fill_chern_pairings(t, p4, s, p);
  return t;
}

Int intersection_number(const BlowupTable& t, const DivisorExpr& d1, const DivisorExpr& d2, const DivisorExpr& d3,
                        const DivisorExpr& d4) {
  const std::array<DivisorExpr, 4> ds = {d1.in_basis(t.native), d2.in_basis(t.native), d3.in_basis(t.native),
                                         d4.in_basis(t.native)};
  Int total = 0;
  for (unsigned mask = 0; mask < 16; ++mask) {
    Int c = 1;
    int e_count = 0;
    for (unsigned i = 0; i < 4; ++i) {
      if (mask & (1u << i)) {
        c = checked_mul(c, ds[i].second());
        ++e_count;
      } else {
        c = checked_mul(c, ds[i].first());
      }
    }
    total = checked_add(total, checked_mul(c, t.monomials[static_cast<std::size_t>(e_count)]));
  }
  return total;
}

Int c2_pairing(const BlowupTable& t, const DivisorExpr& x, const DivisorExpr& y) {
  const DivisorExpr a = x.in_basis(t.native);
  const DivisorExpr b = y.in_basis(t.native);
  Int v = checked_mul(checked_mul(a.first(), b.first()), t.c2_hh);
  v = checked_add(v, checked_mul(checked_add(checked_mul(a.first(), b.second()), checked_mul(a.second(), b.first())),
                                 t.c2_he));
  return checked_add(v, checked_mul(checked_mul(a.second(), b.second()), t.c2_ee));
}

Int c1c2_pairing(const BlowupTable& t, const DivisorExpr& x) {
  const DivisorExpr a = x.in_basis(t.native);
  return checked_add(checked_mul(a.first(), t.c1c2_h), checked_mul(a.second(), t.c1c2_e));
}

DivisorExpr first_chern_class(const BlowupTable& t) { return {t.native, t.index, -1}; }

LinearInK exceptional_slope_identity(const BlowupTable& t) {
  const DivisorExpr l = DivisorExpr::pullback_h(4, -1);
  return {intersection_number(t, l, l, l, DivisorExpr::pullback_h(3, 0)),
          intersection_number(t, l, l, l, DivisorExpr::pullback_h(0, -1))};
}

Int riemann_roch_bracket(const BlowupTable& t, const DivisorExpr& d) {
  const DivisorExpr c1 = first_chern_class(t);
  Int v = intersection_number(t, d, d, d, d);
  v = checked_add(v, checked_mul(2, intersection_number(t, d, d, d, c1)));
  v = checked_add(v, intersection_number(t, d, d, c1, c1));
  v = checked_add(v, c2_pairing(t, d, d));
  return checked_add(v, c1c2_pairing(t, d));
}

Int riemann_roch_chi(const BlowupTable& t, const FourfoldAmbient& x, const DivisorExpr& d) {
  const Int bracket = riemann_roch_bracket(t, d);
  if (bracket % 24 != 0)
    throw std::domain_error("riemann_roch_chi: bracket " + std::to_string(bracket) +
                            " is not divisible by 24; the table is inconsistent");
  return checked_add(bracket / 24, x.chi_structure_sheaf);
}

}  // namespace mukai::blowup
