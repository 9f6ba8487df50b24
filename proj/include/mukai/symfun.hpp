#pragma once

#include <concepts>
#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mukai/graded_poly.hpp"

namespace mukai::symfun {

/// Element of a graded commutative ring that can hold Chern classes.
/// zero() and one() return elements living in the same ring as *this.
template <class R>
concept ChernCoefficient = requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { a.zero() } -> std::convertible_to<R>;
  { a.one() } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
};

/// Total Chern class c_0 + c_1 + ... + c_T of a (possibly virtual) bundle.
/// Entry i must be homogeneous of degree i. Virtual classes (inverses) carry
/// a negative rank.
template <ChernCoefficient R>
class ChernVector {
 public:
  ChernVector(int rank, std::vector<R> classes) : rank_(rank), classes_(std::move(classes)) {
    if (classes_.empty()) throw std::invalid_argument("ChernVector: empty class list");
    if (!(classes_.front() == classes_.front().one()))
      throw std::invalid_argument("ChernVector: c_0 must be 1");
  }

  /// Trivial bundle of the given rank, truncated at `top`.
  static ChernVector trivial(const R& like, int rank, int top) {
    std::vector<R> cs(static_cast<std::size_t>(top) + 1, like.zero());
    cs[0] = like.one();
    return ChernVector(rank, std::move(cs));
  }

  /// Line bundle with first Chern class `c1`.
  static ChernVector line_bundle(const R& c1, int top) {
    ChernVector v = trivial(c1, 1, top);
    if (top >= 1) v.classes_[1] = c1;
    return v;
  }

  int rank() const { return rank_; }
  int top_degree() const { return static_cast<int>(classes_.size()) - 1; }
  const R& operator[](int i) const { return classes_.at(static_cast<std::size_t>(i)); }
  const std::vector<R>& classes() const { return classes_; }

  R total() const {
    R t = classes_[0].zero();
    for (const R& c : classes_) t = t + c;
    return t;
  }

  bool operator==(const ChernVector& o) const { return rank_ == o.rank_ && classes_ == o.classes_; }

 private:
  int rank_;
  std::vector<R> classes_;
};

template <ChernCoefficient R>
ChernVector<R> whitney_sum(const ChernVector<R>& a, const ChernVector<R>& b) {
  if (a.top_degree() != b.top_degree())
    throw std::invalid_argument("whitney_sum: truncation degrees differ");
  const int top = a.top_degree();
  std::vector<R> out;
  out.reserve(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) {
    R s = a[0].zero();
    for (int i = 0; i <= k; ++i) s = s + a[i] * b[k - i];
    out.push_back(std::move(s));
  }
  return ChernVector<R>(a.rank() + b.rank(), std::move(out));
}

/// b with a·b = 1 through the truncation degree (b_k = -Σ_{i≥1} a_i b_{k-i}).
template <ChernCoefficient R>
ChernVector<R> invert_total_class(const ChernVector<R>& a) {
  if (!(a[0] == a[0].one())) throw std::invalid_argument("invert_total_class: c_0 must be 1");
  const int top = a.top_degree();
  std::vector<R> b;
  b.reserve(static_cast<std::size_t>(top) + 1);
  b.push_back(a[0].one());
  for (int k = 1; k <= top; ++k) {
    R s = a[0].zero();
    for (int i = 1; i <= k; ++i) s = s + a[i] * b[static_cast<std::size_t>(k - i)];
    b.push_back(s.zero() - s);
  }
  return ChernVector<R>(-a.rank(), std::move(b));
}

template <ChernCoefficient R>
ChernVector<R> power(const ChernVector<R>& a, int k) {
  if (k < 0) return power(invert_total_class(a), -k);
  ChernVector<R> r = ChernVector<R>::trivial(a[0], 0, a.top_degree());
  for (int i = 0; i < k; ++i) r = whitney_sum(r, a);
  return r;
}

/// Universal polynomial for c(A ⊗ B) with rank A = ra, rank B = rb, in the
/// ring generated by e_1..e_ra (classes of A, degree i) and f_1..f_rb
/// (classes of B), truncated at weighted degree `top`.
///
/// Built from Chern roots: expand Π_{i,j}(1 + y_i + q_j), then rewrite the
/// y-bank and q-bank in elementary symmetric polynomials by repeatedly
/// cancelling the lex-leading term.
GradedPoly universal_tensor_polynomial(int ra, int rb, int top);

/// Rewrites a polynomial that is symmetric in `bank` (generator indices) in
/// terms of the generators `elementary` (elementary[k-1] stands for e_k of the
/// bank). Throws std::domain_error if the input is not symmetric in the bank.
GradedPoly rewrite_in_elementary(const GradedPoly& p, const std::vector<std::size_t>& bank,
                                 const std::vector<std::size_t>& elementary, int top);

/// e_k of the listed generators, as a polynomial in the same ring.
GradedPoly elementary_symmetric(const std::shared_ptr<const GradedRing>& ring,
                                const std::vector<std::size_t>& vars, int k);

/// Evaluates a polynomial in (e_1..e_ra, f_1..f_rb) by substituting the
/// classes of `a` and `b`, collecting each term into its degree slot.
template <ChernCoefficient R>
ChernVector<R> substitute_classes(const GradedPoly& universal, const ChernVector<R>& a,
                                  const ChernVector<R>& b, int ra, int rb, int rank_out) {
  const int top = a.top_degree();
  const R zero = a[0].zero();
  std::vector<R> out(static_cast<std::size_t>(top) + 1, zero);
  auto class_of = [&](std::size_t gen) -> const R& {
    return gen < static_cast<std::size_t>(ra) ? a[static_cast<int>(gen) + 1]
                                              : b[static_cast<int>(gen) - ra + 1];
  };
  // powers[gen][e] caches class^e
  std::vector<std::vector<R>> powers(static_cast<std::size_t>(ra + rb));
  auto pw = [&](std::size_t gen, int e) -> const R& {
    auto& cache = powers[gen];
    if (cache.empty()) cache.push_back(zero.one());
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * class_of(gen));
    return cache[static_cast<std::size_t>(e)];
  };
  for (const auto& [m, c] : universal.terms()) {
    const int d = universal.weighted_degree(m);
    if (d > top) continue;
    bool fits = true;
    for (std::size_t g = 0; g < m.size(); ++g) {
      int cls = g < static_cast<std::size_t>(ra) ? static_cast<int>(g) + 1 : static_cast<int>(g) - ra + 1;
      if (m[g] > 0 && cls > top) fits = false;
    }
    if (!fits) continue;
    R term = zero.one();
    for (std::size_t g = 0; g < m.size(); ++g)
      if (m[g] > 0) term = term * pw(g, m[g]);
    R scaled = zero;
    R addend = term;
    for (Int mag = c < 0 ? -c : c; mag > 0; mag >>= 1) {
      if (mag & 1) scaled = scaled + addend;
      if (mag > 1) addend = addend + addend;
    }
    out[static_cast<std::size_t>(d)] = c < 0 ? out[static_cast<std::size_t>(d)] - scaled
                                             : out[static_cast<std::size_t>(d)] + scaled;
  }
  return ChernVector<R>(rank_out, std::move(out));
}

/// Total Chern class of a ⊗ b. Uses c_1..c_rank of each factor; both must be
/// honest (non-virtual) bundles truncated at the same degree.
template <ChernCoefficient R>
ChernVector<R> tensor_chern(const ChernVector<R>& a, const ChernVector<R>& b) {
  if (a.top_degree() != b.top_degree()) throw std::invalid_argument("tensor_chern: truncation degrees differ");
  if (a.rank() < 0 || b.rank() < 0) throw std::invalid_argument("tensor_chern: virtual bundles are not supported");
  const int top = a.top_degree();
  const int ra = std::min(a.rank(), top);
  const int rb = std::min(b.rank(), top);
  if (ra == 0 || rb == 0) return ChernVector<R>::trivial(a[0], a.rank() * b.rank(), top);
  GradedPoly u = universal_tensor_polynomial(ra, rb, top);
  return substitute_classes(u, a, b, ra, rb, a.rank() * b.rank());
}

}  // namespace mukai::symfun
