#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mukai/checked.hpp"

namespace mukai::symfun {

/// Named generators with positive degrees. Shared by every element of the ring.
class GradedRing {
 public:
  GradedRing(std::vector<std::string> names, std::vector<int> degrees);

  static std::shared_ptr<const GradedRing> make(std::vector<std::string> names, std::vector<int> degrees);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int degree(std::size_t i) const { return degrees_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& degrees() const { return degrees_; }

  bool operator==(const GradedRing& other) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
};

using Monomial = std::vector<int>;

/// Integer polynomial in the generators of a GradedRing.
class GradedPoly {
 public:
  explicit GradedPoly(std::shared_ptr<const GradedRing> ring);

  static GradedPoly constant(std::shared_ptr<const GradedRing> ring, Int c);
  static GradedPoly generator(std::shared_ptr<const GradedRing> ring, std::size_t i);

  const std::shared_ptr<const GradedRing>& ring() const { return ring_; }
  const std::map<Monomial, Int>& terms() const { return terms_; }

  GradedPoly zero() const { return GradedPoly(ring_); }
  GradedPoly one() const { return constant(ring_, 1); }
  bool is_zero() const { return terms_.empty(); }

  int weighted_degree(const Monomial& m) const;
  /// Highest weighted degree of a term; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  GradedPoly homogeneous_component(int d) const;
  GradedPoly truncated(int top) const;

  Int coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, Int c);

  GradedPoly operator+(const GradedPoly& o) const;
  GradedPoly operator-(const GradedPoly& o) const;
  GradedPoly operator-() const;
  GradedPoly operator*(const GradedPoly& o) const;
  GradedPoly operator*(Int c) const;
  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  bool operator==(const GradedPoly& o) const;

  /// Product truncated at a weighted degree; avoids building discarded terms.
  GradedPoly multiply_truncated(const GradedPoly& o, int top) const;
  GradedPoly pow(int e) const;

  std::string to_string() const;

 private:
  void check_ring(const GradedPoly& o) const;

  std::shared_ptr<const GradedRing> ring_;
  std::map<Monomial, Int> terms_;
};

}  // namespace mukai::symfun
