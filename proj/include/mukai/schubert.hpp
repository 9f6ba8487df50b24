#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "mukai/checked.hpp"
#include "mukai/symfun.hpp"

namespace mukai::schubert {

/// Partition (a, b) indexing σ_{a,b} on Gr(2,n); valid iff n-2 ≥ a ≥ b ≥ 0.
struct SchubertIndex {
  int a = 0;
  int b = 0;

  int codim() const { return a + b; }
  bool valid_for(int n) const { return n - 2 >= a && a >= b && b >= 0; }
  auto operator<=>(const SchubertIndex&) const = default;
};

/// Integer combination of Schubert classes in the Chow ring of Gr(2,n).
/// Zero coefficients are never stored.
class ChowClassGr {
 public:
  explicit ChowClassGr(int n);

  static ChowClassGr sigma(int n, int a, int b = 0);
  static ChowClassGr unit(int n) { return sigma(n, 0, 0); }
  static ChowClassGr point(int n) { return sigma(n, n - 2, n - 2); }

  int ambient() const { return n_; }
  int dimension() const { return 2 * (n_ - 2); }
  const std::map<SchubertIndex, Int>& terms() const { return terms_; }

  Int coefficient(int a, int b) const;
  void add(SchubertIndex idx, Int c);

  ChowClassGr zero() const { return ChowClassGr(n_); }
  ChowClassGr one() const { return unit(n_); }
  bool is_zero() const { return terms_.empty(); }

  bool is_homogeneous() const;
  /// Codimension of a nonzero homogeneous class; throws otherwise.
  int codim() const;
  ChowClassGr homogeneous_component(int codim) const;

  ChowClassGr operator+(const ChowClassGr& o) const;
  ChowClassGr operator-(const ChowClassGr& o) const;
  ChowClassGr operator-() const;
  ChowClassGr operator*(const ChowClassGr& o) const;
  ChowClassGr operator*(Int c) const;
  ChowClassGr& operator+=(const ChowClassGr& o);
  bool operator==(const ChowClassGr& o) const = default;

  ChowClassGr pow(int e) const;

  /// e.g. "3*s[4,2] + 2*s[3,3]"
  std::string to_string() const;

 private:
  void check_same(const ChowClassGr& o) const;

  int n_;
  std::map<SchubertIndex, Int> terms_;
};

using ChernClassesGr = symfun::ChernVector<ChowClassGr>;

/// x·σ_c by Pieri: σ_{a,b}σ_c = Σ σ_{e,f}, e+f = a+b+c, n-2 ≥ e ≥ a ≥ f ≥ b.
ChowClassGr pieri_multiply(const ChowClassGr& x, int c);

/// General product, reducing σ_{c,d} = σ_cσ_d − σ_{c+1}σ_{d−1} to Pieri steps.
ChowClassGr multiply(const ChowClassGr& x, const ChowClassGr& y);

/// Degree: coefficient of the point class σ_{n-2,n-2}.
Int integrate(const ChowClassGr& x);

/// c(S^∨) and c(Q) of the tautological sequence 0 → S → O^n → Q → 0,
/// truncated at dim Gr(2,n).
ChernClassesGr dual_tautological_sub_chern(int n);
ChernClassesGr tautological_quotient_chern(int n);

/// Total Chern class of Gr(2,n), computed as c(S^∨ ⊗ Q).
ChernClassesGr tangent_chern(int n);

/// c(Gr(2,n)) / (1+σ_1)^k: Chern classes of a smooth section by k hyperplanes,
/// kept as ambient classes through degree dim Gr(2,n).
ChernClassesGr adjunct_linear_sections(int n, int k);

/// ∫ c_top(X)·σ_1^k for X a smooth section of Gr(2,n) by k hyperplanes.
Int euler_characteristic_section(int n, int k);

/// ∫ x·y·σ_1^k; x, y homogeneous with codim(x)+codim(y)+k = dim Gr(2,n).
Int pairing_on_section(int n, int k, const ChowClassGr& x, const ChowClassGr& y);

/// Gram matrix of the restricted intersection form on the given basis.
std::vector<std::vector<Int>> gram_matrix_on_section(int n, int k, const std::vector<ChowClassGr>& basis);

}  // namespace mukai::schubert
