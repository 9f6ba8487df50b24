#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mukai/blowup.hpp"
#include "mukai/report.hpp"

namespace mukai::sarkisov {

using blowup::SurfaceInvariants;
using report::VerificationReport;

/// Blowup of P² at points embedded by aL − Σ m_i E_i.
struct PlaneBlowupModel {
  Int plane_degree = 1;
  std::vector<Int> multiplicities;
};

/// Blowup of a base surface at points, embedded by H₀ − Σ m_i E_i, with the
/// image acquiring `double_points` transverse double points after projection.
struct BlownUpSurfaceModel {
  Int base_h_squared = 1;
  Int base_h_dot_canonical = -3;
  Int base_k_squared = 9;
  Int base_euler_number = 3;
  std::vector<Int> multiplicities;
  Int double_points = 0;

  static BlownUpSurfaceModel plane(const PlaneBlowupModel& m, Int double_points = 0);
  /// K3 surface of the given degree blown up at `points` simple points.
  static BlownUpSurfaceModel k3(Int degree, int points, Int double_points = 0);
};

SurfaceInvariants surface_from_blowup_model(const BlownUpSurfaceModel& m);
SurfaceInvariants surface_from_plane_blowup(const PlaneBlowupModel& m);

/// One row of the invariant table of the pair Σ ⊂ X_{2g−2}, F ⊂ P⁴.
struct Table1Row {
  Int sigma_degree = 0;
  Int sigma_genus = 0;
  Int f_degree = 0;
  Int f_genus = 0;
  Int f_singular = 0;
  Int m22 = 0;  // (φ*L)²·D²
  Int m13 = 0;  // (φ*L)·D³
  Int m04 = 0;  // D⁴

  bool operator==(const Table1Row&) const = default;
};

struct LinkCase {
  int genus = 0;
  std::string sigma_name;
  std::string f_name;
  SurfaceInvariants sigma;
  SurfaceInvariants f;
  Table1Row expected;
};

const std::vector<int>& catalog_genera();
LinkCase catalog(int genus);

/// Published table values for the four links.
Table1Row reference_row(int genus);

/// Blowup of P⁴ along F, in the (ρ*H, E) basis.
blowup::BlowupTable reverse_table(const LinkCase& c);
/// Blowup of X_{2g−2} along Σ, in the (φ*L, D) basis.
blowup::BlowupTable forward_table(const LinkCase& c, Int c2_dot_sigma);

/// c₂(X)·Σ forced by the expected D⁴.
Int solve_c2_dot_sigma(const LinkCase& c);
/// c₂(X₁₄)·Σ for the quintic del Pezzo Σ = σ₁,₁|X₁₄, by Schubert calculus.
Int schubert_c2_dot_sigma_genus8();

/// Table row recomputed from the F side alone.
Table1Row computed_row(const LinkCase& c);

VerificationReport verify_reverse(const LinkCase& c);
/// nullopt means "solve c₂(X)·Σ from the expected D⁴".
VerificationReport verify_forward(const LinkCase& c, std::optional<Int> c2_dot_sigma);
VerificationReport relations_roundtrip();
VerificationReport table1_report();

std::string format_table1(const std::vector<std::pair<int, Table1Row>>& rows);

}  // namespace mukai::sarkisov
