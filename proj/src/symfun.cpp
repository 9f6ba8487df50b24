#include "mukai/symfun.hpp"

#include <algorithm>
#include <string>

namespace mukai::symfun {

namespace {

void subsets(const std::vector<std::size_t>& vars, int k, std::size_t start, std::vector<std::size_t>& chosen,
             std::vector<std::vector<std::size_t>>& out) {
  if (static_cast<int>(chosen.size()) == k) {
    out.push_back(chosen);
    return;
  }
  for (std::size_t i = start; i < vars.size(); ++i) {
    chosen.push_back(vars[i]);
    subsets(vars, k, i + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

GradedPoly elementary_symmetric(const std::shared_ptr<const GradedRing>& ring, const std::vector<std::size_t>& vars,
                                int k) {
  GradedPoly r(ring);
  if (k == 0) return GradedPoly::constant(ring, 1);
  std::vector<std::vector<std::size_t>> all;
  std::vector<std::size_t> chosen;
  subsets(vars, k, 0, chosen, all);
  for (const auto& s : all) {
    Monomial m(ring->size(), 0);
    for (std::size_t v : s) m[v] = 1;
    r.add_term(m, 1);
  }
  return r;
}

GradedPoly rewrite_in_elementary(const GradedPoly& p, const std::vector<std::size_t>& bank,
                                 const std::vector<std::size_t>& elementary, int top) {
  const auto& ring = p.ring();
  if (elementary.size() < bank.size())
    throw std::invalid_argument("rewrite_in_elementary: need one elementary generator per bank variable");

  std::vector<GradedPoly> e_in_bank;
  for (std::size_t k = 1; k <= bank.size(); ++k)
    e_in_bank.push_back(elementary_symmetric(ring, bank, static_cast<int>(k)));

  auto bank_part = [&](const Monomial& m) {
    std::vector<int> a;
    a.reserve(bank.size());
    for (std::size_t v : bank) a.push_back(m[v]);
    return a;
  };

  GradedPoly work = p.truncated(top);
  GradedPoly result(ring);
  while (true) {
    // lex-largest exponent vector over the bank
    std::vector<int> lead;
    bool found = false;
    for (const auto& [m, c] : work.terms()) {
      auto a = bank_part(m);
      if (std::all_of(a.begin(), a.end(), [](int x) { return x == 0; })) continue;
      if (!found || a > lead) {
        lead = a;
        found = true;
      }
    }
    if (!found) break;
    for (std::size_t i = 0; i + 1 < lead.size(); ++i)
      if (lead[i] < lead[i + 1]) throw std::domain_error("rewrite_in_elementary: polynomial is not symmetric in the bank");

    // coefficient of y^lead as a polynomial in the remaining generators
    GradedPoly coeff(ring);
    for (const auto& [m, c] : work.terms()) {
      if (bank_part(m) != lead) continue;
      Monomial rest = m;
      for (std::size_t v : bank) rest[v] = 0;
      coeff.add_term(rest, c);
    }

    GradedPoly in_bank = coeff;
    Monomial symbolic(ring->size(), 0);
    for (std::size_t k = 0; k < lead.size(); ++k) {
      int e = lead[k] - (k + 1 < lead.size() ? lead[k + 1] : 0);
      if (e == 0) continue;
      symbolic[elementary[k]] += e;
      in_bank = in_bank.multiply_truncated(e_in_bank[k].pow(e), top);
    }
    work -= in_bank;
    GradedPoly sym(ring);
    sym.add_term(symbolic, 1);
    result += coeff.multiply_truncated(sym, top);
  }
  result += work;
  return result.truncated(top);
}

GradedPoly universal_tensor_polynomial(int ra, int rb, int top) {
  if (ra <= 0 || rb <= 0) throw std::invalid_argument("universal_tensor_polynomial: ranks must be positive");
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (int i = 1; i <= ra; ++i) names.push_back("y" + std::to_string(i)), degrees.push_back(1);
  for (int j = 1; j <= rb; ++j) names.push_back("q" + std::to_string(j)), degrees.push_back(1);
  for (int i = 1; i <= ra; ++i) names.push_back("e" + std::to_string(i)), degrees.push_back(i);
  for (int j = 1; j <= rb; ++j) names.push_back("f" + std::to_string(j)), degrees.push_back(j);
  auto ring = GradedRing::make(names, degrees);

  const auto ra_u = static_cast<std::size_t>(ra);
  const auto rb_u = static_cast<std::size_t>(rb);
  std::vector<std::size_t> y, q, e, f;
  for (std::size_t i = 0; i < ra_u; ++i) y.push_back(i);
  for (std::size_t j = 0; j < rb_u; ++j) q.push_back(ra_u + j);
  for (std::size_t i = 0; i < ra_u; ++i) e.push_back(ra_u + rb_u + i);
  for (std::size_t j = 0; j < rb_u; ++j) f.push_back(2 * ra_u + rb_u + j);

  GradedPoly prod = GradedPoly::constant(ring, 1);
  for (std::size_t i : y)
    for (std::size_t j : q) {
      GradedPoly factor = GradedPoly::constant(ring, 1) + GradedPoly::generator(ring, i) + GradedPoly::generator(ring, j);
      prod = prod.multiply_truncated(factor, top);
    }

  GradedPoly in_e = rewrite_in_elementary(prod, y, e, top);
  GradedPoly in_ef = rewrite_in_elementary(in_e, q, f, top);

  std::vector<std::string> out_names(names.begin() + static_cast<long>(ra_u + rb_u), names.end());
  std::vector<int> out_degrees(degrees.begin() + static_cast<long>(ra_u + rb_u), degrees.end());
  auto out_ring = GradedRing::make(out_names, out_degrees);
  GradedPoly out(out_ring);
  for (const auto& [m, c] : in_ef.terms()) {
    for (std::size_t v = 0; v < ra_u + rb_u; ++v)
      if (m[v] != 0) throw std::logic_error("universal_tensor_polynomial: root variables survived rewriting");
    out.add_term(Monomial(m.begin() + static_cast<long>(ra_u + rb_u), m.end()), c);
  }
  return out;
}

}  // namespace mukai::symfun
