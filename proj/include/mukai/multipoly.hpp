#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mukai::poly {

using Exponent = std::vector<int>;
using Point = std::vector<mpq_class>;

/// Sparse polynomial over Q in named variables. Zero coefficients are never
/// stored. Two polynomials can only be combined when their variable lists
/// agree exactly.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, const mpq_class& c);
  static MultiPoly variable(std::vector<std::string> vars, std::size_t i);
  /// Σ coeffs[i]·vars[i]
  static MultiPoly linear(std::vector<std::string> vars, const Point& coeffs);
  /// x0..x{n-1} style names.
  static std::vector<std::string> numbered(const std::string& prefix, int first, int count);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::map<Exponent, mpq_class>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Total degree; −1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  MultiPoly homogeneous_component(int d) const;
  int degree_in(const std::vector<std::size_t>& subset) const;
  /// Minimum over terms of the degree in the given variables; −1 if zero.
  int order_in(const std::vector<std::size_t>& subset) const;
  mpq_class coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const mpq_class& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const mpq_class& c) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly pow(int k) const;
  bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

  MultiPoly derivative(std::size_t i) const;
  mpq_class evaluate(const Point& p) const;
  /// Replaces vars[i] by images[i]; all images share a target ring.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  /// Coefficients of a linear form, in variable order. Throws if not linear homogeneous.
  Point linear_coefficients() const;

  /// Quotient and remainder by lex-order multivariate division.
  std::pair<MultiPoly, MultiPoly> divide(const MultiPoly& divisor) const;

  std::string to_string() const;

 private:
  void require_same_ring(const MultiPoly& o) const;

  std::vector<std::string> vars_;
  std::map<Exponent, mpq_class> terms_;
};

/// Parses `^`, `*`, `+`, `-`, parentheses, integer and a/b coefficients.
/// If `vars` is empty the ring is formed from the identifiers that occur,
/// sorted by prefix and then numeric suffix.
MultiPoly parse(const std::string& text, std::vector<std::string> vars = {});

/// Embeds p into a ring with more (or reordered) variables, by name.
MultiPoly embed(const MultiPoly& p, const std::vector<std::string>& vars);

}  // namespace mukai::poly
