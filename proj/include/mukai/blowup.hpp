#pragma once

#include <array>
#include <string>

#include <gmpxx.h>

#include "mukai/checked.hpp"

namespace mukai::blowup {

/// Numerical invariants of a surface S with an embedded (possibly nodal) image.
struct SurfaceInvariants {
  Int degree = 1;            // d = H²·S
  Int sectional_genus = 0;   // π
  Int k_squared = 0;         // K_S²
  Int euler_number = 0;      // c₂(S)
  Int double_points = 0;     // δ, transverse double points of the image

  /// K_S·C from 2π − 2 = d + K_S·C.
  Int canonical_dot_section() const { return checked_sub(checked_sub(2 * sectional_genus, 2), degree); }
  /// χ(O_S) by Noether; throws if K² + c₂ is not divisible by 12.
  Int holomorphic_euler_characteristic() const;
  /// Left side of the double-point formula in P⁴,
  /// d² − 10d − 5H·K − 2K² + 12χ(O_S); equals 2δ for a surface in P⁴.
  Int double_point_defect() const;

  bool operator==(const SurfaceInvariants&) const = default;
};

/// Data of a smooth projective fourfold X with Pic generated (numerically) by H.
struct FourfoldAmbient {
  Int degree = 1;             // H⁴
  Int index = 5;              // −K_X = index·H
  Int c2_dot_h2 = 10;         // c₂(X)·H²
  Int chi_structure_sheaf = 1;

  static FourfoldAmbient projective_space();
  /// Mukai fourfold X_{2g−2}: H⁴ = 2g−2, index 2, c₂·H² = 2g+22.
  static FourfoldAmbient mukai(int genus);

  bool operator==(const FourfoldAmbient&) const = default;
};

/// Intersection numbers of the blowup centre with ambient classes.
struct CenterPairings {
  Int surface_dot_h2 = 0;          // S·H²
  Int h_dot_canonical_s = 0;       // H|_S·K_S
  Int canonical_x_dot_h = 0;       // K_X·H·S
  Int canonical_x_dot_canonical_s = 0;  // K_X|_S·K_S
  Int canonical_x_squared = 0;     // K_X²·S
  Int c2_dot_surface = 0;          // c₂(X)·S

  /// Pairings for a centre in an ambient with K_X = −index·H.
  static CenterPairings from_invariants(const FourfoldAmbient& x, const SurfaceInvariants& s, Int c2_dot_surface);
};

/// Divisor bases on the two-ray blowup. (ρ*H, E) is the P⁴ side, (φ*L, D)
/// the Mukai side, related by φ*L = 4ρ*H − E, D = 3ρ*H − E.
enum class DivisorBasis { PullbackExceptional, Contracted };

std::string to_string(DivisorBasis b);

class DivisorExpr {
 public:
  constexpr DivisorExpr(DivisorBasis basis, Int first, Int second) : basis_(basis), first_(first), second_(second) {}

  static DivisorExpr pullback_h(Int a = 1, Int b = 0) { return {DivisorBasis::PullbackExceptional, a, b}; }
  static DivisorExpr contracted(Int a = 1, Int b = 0) { return {DivisorBasis::Contracted, a, b}; }

  DivisorBasis basis() const { return basis_; }
  Int first() const { return first_; }
  Int second() const { return second_; }

  DivisorExpr in_basis(DivisorBasis target) const;

  DivisorExpr operator+(const DivisorExpr& o) const;
  DivisorExpr operator-(const DivisorExpr& o) const;
  DivisorExpr operator*(Int c) const;
  bool operator==(const DivisorExpr& o) const;

  std::string to_string() const;

 private:
  DivisorBasis basis_;
  Int first_;
  Int second_;
};

/// Degree-4 pairing table on the blowup of a fourfold along a surface.
/// Monomials are stored in the table's native basis (H, E): the pullback of
/// the ambient generator and the exceptional divisor. c₁ of the blowup is
/// index·H − E.
struct BlowupTable {
  DivisorBasis native = DivisorBasis::PullbackExceptional;
  Int index = 5;
  /// monomials[j] = H^{4−j}·E^j
  std::array<Int, 5> monomials{};
  Int c2_hh = 0;   // c₂·H²
  Int c2_he = 0;   // c₂·H·E
  Int c2_ee = 0;   // c₂·E²
  Int c1c2_h = 0;  // c₁c₂·H
  Int c1c2_e = 0;  // c₁c₂·E

  bool operator==(const BlowupTable&) const = default;
};

/// Blowup of a smooth fourfold along a smooth surface.
BlowupTable smooth_blowup_table(const FourfoldAmbient& x, const SurfaceInvariants& s, const CenterPairings& p,
                                DivisorBasis native = DivisorBasis::PullbackExceptional);

/// Blowup of P⁴ along a surface with δ transverse double points.
BlowupTable nodal_blowup_table(const SurfaceInvariants& s);

/// Multilinear expansion of d1·d2·d3·d4 against the table.
Int intersection_number(const BlowupTable& t, const DivisorExpr& d1, const DivisorExpr& d2, const DivisorExpr& d3,
                        const DivisorExpr& d4);

/// c₂(X̃)·x·y
Int c2_pairing(const BlowupTable& t, const DivisorExpr& x, const DivisorExpr& y);
/// c₁(X̃)·c₂(X̃)·x
Int c1c2_pairing(const BlowupTable& t, const DivisorExpr& x);
DivisorExpr first_chern_class(const BlowupTable& t);

/// constant + slope·k
struct LinearInK {
  Int constant = 0;
  Int slope = 0;

  mpq_class operator()(const mpq_class& k) const { return mpq_class(constant) + mpq_class(slope) * k; }
  bool operator==(const LinearInK&) const = default;
};

/// (4ρ*H − E)³·(3ρ*H − kE) as a linear polynomial in k.
LinearInK exceptional_slope_identity(const BlowupTable& t);

/// The bracket D⁴ + 2D³c₁ + D²(c₁² + c₂) + D·c₁c₂ of Riemann–Roch on a fourfold.
Int riemann_roch_bracket(const BlowupTable& t, const DivisorExpr& d);

/// χ(O(D)) = bracket/24 + χ(O). Throws std::domain_error when 24 does not
/// divide the bracket, which means the table is inconsistent.
Int riemann_roch_chi(const BlowupTable& t, const FourfoldAmbient& x, const DivisorExpr& d);

}  // namespace mukai::blowup
