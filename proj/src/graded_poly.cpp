#include "mukai/graded_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace mukai::symfun {

GradedRing::GradedRing(std::vector<std::string> names, std::vector<int> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees)) {
  if (names_.size() != degrees_.size()) throw std::invalid_argument("GradedRing: names/degrees size mismatch");
  for (int d : degrees_)
    if (d <= 0) throw std::invalid_argument("GradedRing: generator degrees must be positive");
}

std::shared_ptr<const GradedRing> GradedRing::make(std::vector<std::string> names, std::vector<int> degrees) {
  return std::make_shared<const GradedRing>(std::move(names), std::move(degrees));
}

GradedPoly::GradedPoly(std::shared_ptr<const GradedRing> ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("GradedPoly: null ring");
}

GradedPoly GradedPoly::constant(std::shared_ptr<const GradedRing> ring, Int c) {
  GradedPoly p(std::move(ring));
  p.add_term(Monomial(p.ring_->size(), 0), c);
  return p;
}

GradedPoly GradedPoly::generator(std::shared_ptr<const GradedRing> ring, std::size_t i) {
  GradedPoly p(std::move(ring));
  Monomial m(p.ring_->size(), 0);
  m.at(i) = 1;
  p.add_term(m, 1);
  return p;
}

int GradedPoly::weighted_degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * ring_->degree(i);
  return d;
}

int GradedPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, weighted_degree(m));
  return d;
}

bool GradedPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int w = weighted_degree(m);
    if (d >= 0 && w != d) return false;
    d = w;
  }
  return true;
}

GradedPoly GradedPoly::homogeneous_component(int d) const {
  GradedPoly r(ring_);
  for (const auto& [m, c] : terms_)
    if (weighted_degree(m) == d) r.terms_.emplace(m, c);
  return r;
}

GradedPoly GradedPoly::truncated(int top) const {
  GradedPoly r(ring_);
  for (const auto& [m, c] : terms_)
    if (weighted_degree(m) <= top) r.terms_.emplace(m, c);
  return r;
}

Int GradedPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void GradedPoly::add_term(const Monomial& m, Int c) {
  if (m.size() != ring_->size()) throw std::invalid_argument("GradedPoly: monomial arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void GradedPoly::check_ring(const GradedPoly& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) throw std::invalid_argument("GradedPoly: ring mismatch");
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
  GradedPoly r = *this;
  r += o;
  return r;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const {
  GradedPoly r = *this;
  r -= o;
  return r;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, checked_sub(0, c));
  return r;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, checked_sub(0, c));
  return *this;
}

GradedPoly GradedPoly::multiply_truncated(const GradedPoly& o, int top) const {
  check_ring(o);
  GradedPoly r(ring_);
  Monomial m(ring_->size());
  for (const auto& [ma, ca] : terms_) {
    int da = weighted_degree(ma);
    if (top >= 0 && da > top) continue;
    for (const auto& [mb, cb] : o.terms_) {
      if (top >= 0 && da + weighted_degree(mb) > top) continue;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, checked_mul(ca, cb));
    }
  }
  return r;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const { return multiply_truncated(o, -1); }

GradedPoly GradedPoly::operator*(Int c) const {
  GradedPoly r(ring_);
  for (const auto& [m, v] : terms_) r.add_term(m, checked_mul(v, c));
  return r;
}

bool GradedPoly::operator==(const GradedPoly& o) const {
  return (ring_ == o.ring_ || *ring_ == *o.ring_) && terms_ == o.terms_;
}

GradedPoly GradedPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("GradedPoly::pow: negative exponent");
  GradedPoly r = one();
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    bool constant_term = true;
    for (int e : m) constant_term = constant_term && e == 0;
    Int mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || constant_term) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << "*";
      os << ring_->name(i);
      if (m[i] > 1) os << "^" << m[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace mukai::symfun
