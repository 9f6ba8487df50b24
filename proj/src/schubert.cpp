#include "mukai/schubert.hpp"

#include <sstream>
#include <stdexcept>

namespace mukai::schubert {

ChowClassGr::ChowClassGr(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("ChowClassGr: Gr(2,n) needs n >= 2");
}

ChowClassGr ChowClassGr::sigma(int n, int a, int b) {
  ChowClassGr x(n);
  x.add({a, b}, 1);
  return x;
}

Int ChowClassGr::coefficient(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? 0 : it->second;
}

void ChowClassGr::add(SchubertIndex idx, Int c) {
  if (!idx.valid_for(n_))
    throw std::invalid_argument("ChowClassGr: sigma_{" + std::to_string(idx.a) + "," + std::to_string(idx.b) +
                                "} is not a Schubert class of Gr(2," + std::to_string(n_) + ")");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(idx, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

bool ChowClassGr::is_homogeneous() const {
  int d = -1;
  for (const auto& [idx, c] : terms_) {
    if (d >= 0 && idx.codim() != d) return false;
    d = idx.codim();
  }
  return true;
}

int ChowClassGr::codim() const {
  if (is_zero() || !is_homogeneous()) throw std::domain_error("ChowClassGr::codim: class is zero or not homogeneous");
  return terms_.begin()->first.codim();
}

ChowClassGr ChowClassGr::homogeneous_component(int codim) const {
  ChowClassGr r(n_);
  for (const auto& [idx, c] : terms_)
    if (idx.codim() == codim) r.terms_.emplace(idx, c);
  return r;
}

void ChowClassGr::check_same(const ChowClassGr& o) const {
  if (n_ != o.n_) throw std::invalid_argument("ChowClassGr: classes live on different Grassmannians");
}

ChowClassGr ChowClassGr::operator+(const ChowClassGr& o) const {
  ChowClassGr r = *this;
  r += o;
  return r;
}

ChowClassGr& ChowClassGr::operator+=(const ChowClassGr& o) {
  check_same(o);
  for (const auto& [idx, c] : o.terms_) add(idx, c);
  return *this;
}

ChowClassGr ChowClassGr::operator-() const { return *this * Int{-1}; }

ChowClassGr ChowClassGr::operator-(const ChowClassGr& o) const { return *this + (-o); }

ChowClassGr ChowClassGr::operator*(Int c) const {
  ChowClassGr r(n_);
  for (const auto& [idx, v] : terms_) r.add(idx, checked_mul(v, c));
  return r;
}

ChowClassGr ChowClassGr::operator*(const ChowClassGr& o) const { return multiply(*this, o); }

ChowClassGr ChowClassGr::pow(int e) const {
  if (e < 0) throw std::invalid_argument("ChowClassGr::pow: negative exponent");
  ChowClassGr r = one();
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string ChowClassGr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // larger first part first: s[4,2] before s[3,3]
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [idx, c] = *it;
    Int mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) os << mag << "*";
    os << "s[" << idx.a << "," << idx.b << "]";
  }
  return os.str();
}

ChowClassGr pieri_multiply(const ChowClassGr& x, int c) {
  if (c < 0) throw std::invalid_argument("pieri_multiply: negative degree");
  const int n = x.ambient();
  const int top = n - 2;
  ChowClassGr r(n);
  for (const auto& [idx, coeff] : x.terms()) {
    const int total = idx.a + idx.b + c;
    for (int f = idx.b; f <= idx.a; ++f) {
      const int e = total - f;
      if (e < idx.a || e > top) continue;
      r.add({e, f}, coeff);
    }
  }
  return r;
}

ChowClassGr multiply(const ChowClassGr& x, const ChowClassGr& y) {
  if (x.ambient() != y.ambient()) throw std::invalid_argument("multiply: classes live on different Grassmannians");
  ChowClassGr r(x.ambient());
  for (const auto& [idx, c] : y.terms()) {
    // σ_{a,b} = σ_a σ_b − σ_{a+1} σ_{b−1}
    ChowClassGr term = pieri_multiply(pieri_multiply(x, idx.b), idx.a);
    if (idx.b > 0) term = term - pieri_multiply(pieri_multiply(x, idx.b - 1), idx.a + 1);
    r += term * c;
  }
  return r;
}

Int integrate(const ChowClassGr& x) { return x.coefficient(x.ambient() - 2, x.ambient() - 2); }

ChernClassesGr dual_tautological_sub_chern(int n) {
  const int top = 2 * (n - 2);
  auto v = ChernClassesGr::trivial(ChowClassGr::unit(n), 2, top);
  std::vector<ChowClassGr> cs = v.classes();
  if (top >= 1) cs[1] = ChowClassGr::sigma(n, 1, 0);
  if (top >= 2) cs[2] = ChowClassGr::sigma(n, 1, 1);
  return ChernClassesGr(2, std::move(cs));
}

ChernClassesGr tautological_quotient_chern(int n) {
  const int top = 2 * (n - 2);
  std::vector<ChowClassGr> cs(static_cast<std::size_t>(top) + 1, ChowClassGr(n));
  cs[0] = ChowClassGr::unit(n);
  for (int i = 1; i <= n - 2 && i <= top; ++i) cs[static_cast<std::size_t>(i)] = ChowClassGr::sigma(n, i, 0);
  return ChernClassesGr(n - 2, std::move(cs));
}

ChernClassesGr tangent_chern(int n) {
  if (n < 3) throw std::invalid_argument("tangent_chern: need n >= 3");
  return symfun::tensor_chern(dual_tautological_sub_chern(n), tautological_quotient_chern(n));
}

ChernClassesGr adjunct_linear_sections(int n, int k) {
  if (k < 0) throw std::invalid_argument("adjunct_linear_sections: k must be nonnegative");
  ChernClassesGr tangent = tangent_chern(n);
  auto hyperplane = ChernClassesGr::line_bundle(ChowClassGr::sigma(n, 1, 0), tangent.top_degree());
  ChernClassesGr normal = symfun::power(hyperplane, k);
  ChernClassesGr quotient = symfun::whitney_sum(tangent, symfun::invert_total_class(normal));
  return ChernClassesGr(tangent.rank() - k, quotient.classes());
}

Int euler_characteristic_section(int n, int k) {
  const int dim = 2 * (n - 2) - k;
  if (k < 0 || dim < 0) throw std::invalid_argument("euler_characteristic_section: need 0 <= k <= dim Gr(2,n)");
  ChernClassesGr c = adjunct_linear_sections(n, k);
  return integrate(c[dim] * ChowClassGr::sigma(n, 1, 0).pow(k));
}

Int pairing_on_section(int n, int k, const ChowClassGr& x, const ChowClassGr& y) {
  if (x.ambient() != n || y.ambient() != n) throw std::invalid_argument("pairing_on_section: ambient mismatch");
  if (k < 0) throw std::invalid_argument("pairing_on_section: k must be nonnegative");
  if (x.is_zero() || y.is_zero()) return 0;
  if (!x.is_homogeneous() || !y.is_homogeneous())
    throw std::invalid_argument("pairing_on_section: classes must be homogeneous");
  if (x.codim() + y.codim() + k != 2 * (n - 2))
    throw std::invalid_argument("pairing_on_section: codim(x)+codim(y)+k must equal dim Gr(2,n)");
  return integrate(x * y * ChowClassGr::sigma(n, 1, 0).pow(k));
}

std::vector<std::vector<Int>> gram_matrix_on_section(int n, int k, const std::vector<ChowClassGr>& basis) {
  std::vector<std::vector<Int>> g(basis.size(), std::vector<Int>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g[i][j] = pairing_on_section(n, k, basis[i], basis[j]);
  return g;
}

}  // namespace mukai::schubert
