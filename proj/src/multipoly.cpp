#include "mukai/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mukai::poly {

namespace {

int total(const Exponent& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

}  // namespace

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const mpq_class& c) {
  MultiPoly p(std::move(vars));
  p.add_term(Exponent(p.nvars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t i) {
  MultiPoly p(std::move(vars));
  if (i >= p.nvars()) throw std::out_of_range("MultiPoly::variable: index out of range");
  Exponent e(p.nvars(), 0);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::linear(std::vector<std::string> vars, const Point& coeffs) {
  MultiPoly p(std::move(vars));
  if (coeffs.size() != p.nvars()) throw std::invalid_argument("MultiPoly::linear: wrong number of coefficients");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e(p.nvars(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

std::vector<std::string> MultiPoly::numbered(const std::string& prefix, int first, int count) {
  std::vector<std::string> v;
  for (int i = 0; i < count; ++i) v.push_back(prefix + std::to_string(first + i));
  return v;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total(e));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total(t.first) == d; });
}

MultiPoly MultiPoly::homogeneous_component(int d) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_)
    if (total(e) == d) r.terms_.emplace(e, c);
  return r;
}

int MultiPoly::degree_in(const std::vector<std::size_t>& subset) const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto i : subset) s += e.at(i);
    d = std::max(d, s);
  }
  return d;
}

int MultiPoly::order_in(const std::vector<std::size_t>& subset) const {
  if (terms_.empty()) return -1;
  int d = INT32_MAX;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto i : subset) s += e.at(i);
    d = std::min(d, s);
  }
  return d;
}

mpq_class MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const mpq_class& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("MultiPoly: exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::require_same_ring(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("MultiPoly: variable lists differ");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  require_same_ring(o);
  MultiPoly r(vars_);
  Exponent e(vars_.size());
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const mpq_class& c) const {
  MultiPoly r(vars_);
  if (c == 0) return r;
  for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * c);
  return r;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
  MultiPoly r = constant(vars_, 1), b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

MultiPoly MultiPoly::derivative(std::size_t i) const {
  if (i >= vars_.size()) throw std::out_of_range("MultiPoly::derivative: index out of range");
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    --f[i];
    r.add_term(f, c * e[i]);
  }
  return r;
}

mpq_class MultiPoly::evaluate(const Point& p) const {
  if (p.size() != vars_.size()) throw std::invalid_argument("MultiPoly::evaluate: point has wrong length");
  mpq_class s = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mpq_class pw;
      mpz_pow_ui(pw.get_num_mpz_t(), p[i].get_num_mpz_t(), static_cast<unsigned long>(e[i]));
      mpz_pow_ui(pw.get_den_mpz_t(), p[i].get_den_mpz_t(), static_cast<unsigned long>(e[i]));
      t *= pw;
    }
    s += t;
  }
  return s;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != vars_.size()) throw std::invalid_argument("MultiPoly::substitute: wrong number of images");
  if (images.empty()) return *this;
  const auto& target = images.front().variables();
  for (const auto& im : images)
    if (im.variables() != target) throw std::invalid_argument("MultiPoly::substitute: images in different rings");
  // cache powers, since catalog polynomials reuse them heavily
  std::vector<std::vector<MultiPoly>> powers(vars_.size());
  MultiPoly r(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, 1));
      while (static_cast<int>(cache.size()) <= e[i]) cache.push_back(cache.back() * images[i]);
      t = t * cache[static_cast<std::size_t>(e[i])];
    }
    r += t;
  }
  return r;
}

Point MultiPoly::linear_coefficients() const {
  Point out(vars_.size());
  for (const auto& [e, c] : terms_) {
    if (total(e) != 1) throw std::invalid_argument("MultiPoly: not a linear form: " + to_string());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] == 1) out[i] = c;
  }
  return out;
}

std::pair<MultiPoly, MultiPoly> MultiPoly::divide(const MultiPoly& divisor) const {
  require_same_ring(divisor);
  if (divisor.is_zero()) throw std::domain_error("MultiPoly::divide: division by zero");
  // std::map orders exponents lexicographically, so rbegin() is the lex-leading term
  const auto& [ld, lc] = *divisor.terms_.rbegin();
  MultiPoly q(vars_), r(vars_), p = *this;
  while (!p.is_zero()) {
    const auto [lp, cp] = *p.terms_.rbegin();
    bool divisible = true;
    for (std::size_t i = 0; i < lp.size() && divisible; ++i) divisible = lp[i] >= ld[i];
    if (divisible) {
      Exponent e(lp.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = lp[i] - ld[i];
      MultiPoly t(vars_);
      t.add_term(e, cp / lc);
      q += t;
      p -= t * divisor;
    } else {
      r.add_term(lp, cp);
      p.terms_.erase(std::prev(p.terms_.end()));
    }
  }
  return {q, r};
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending: highest lex term first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpq_class a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    const bool is_const = total(e) == 0;
    bool need_star = false;
    if (a != 1 || is_const) {
      os << a.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

MultiPoly embed(const MultiPoly& p, const std::vector<std::string>& vars) {
  std::vector<std::size_t> where(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), p.variables()[i]);
    if (it == vars.end()) throw std::invalid_argument("embed: variable " + p.variables()[i] + " missing in target");
    where[i] = static_cast<std::size_t>(it - vars.begin());
  }
  MultiPoly r(vars);
  for (const auto& [e, c] : p.terms()) {
    Exponent f(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[where[i]] = e[i];
    r.add_term(f, c);
  }
  return r;
}

namespace {

struct Token {
  enum Kind { Number, Ident, Op, End } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j + 1 < s.size() && s[j] == '/' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      out.push_back({Token::Number, s.substr(i, j - i), i});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Ident, s.substr(i, j - i), i});
      i = j;
    } else if (std::string("+-*^()").find(ch) != std::string::npos) {
      out.push_back({Token::Op, std::string(1, ch), i});
      ++i;
    } else {
      throw std::invalid_argument("polynomial parse error at column " + std::to_string(i + 1) + ": unexpected '" +
                                  std::string(1, ch) + "'");
    }
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::vector<std::string> vars) : toks_(std::move(toks)), vars_(std::move(vars)) {}

  MultiPoly run() {
    MultiPoly p = expr();
    if (peek().kind != Token::End) fail("unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(const std::string& op) {
    if (peek().kind == Token::Op && peek().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("polynomial parse error at column " + std::to_string(peek().pos + 1) + ": " + msg);
  }

  MultiPoly expr() {
    MultiPoly r(vars_);
    bool neg = accept("-");
    if (!neg) accept("+");
    MultiPoly t = term();
    r = neg ? -t : t;
    while (true) {
      if (accept("+"))
        r += term();
      else if (accept("-"))
        r -= term();
      else
        break;
    }
    return r;
  }

  MultiPoly term() {
    MultiPoly r = factor();
    while (accept("*")) r = r * factor();
    return r;
  }

  MultiPoly factor() {
    MultiPoly base = primary();
    if (accept("^")) {
      if (peek().kind != Token::Number || peek().text.find('/') != std::string::npos)
        fail("exponent must be a non-negative integer");
      const std::string t = peek().text;
      ++pos_;
      if (t.size() > 4) fail("exponent too large");
      base = base.pow(std::stoi(t));
    }
    return base;
  }

  MultiPoly primary() {
    const Token t = peek();
    if (t.kind == Token::Number) {
      ++pos_;
      mpq_class q(t.text, 10);
      if (q.get_den() == 0) fail("zero denominator");
      q.canonicalize();
      return MultiPoly::constant(vars_, q);
    }
    if (t.kind == Token::Ident) {
      ++pos_;
      auto it = std::find(vars_.begin(), vars_.end(), t.text);
      if (it == vars_.end()) fail("unknown variable '" + t.text + "'");
      return MultiPoly::variable(vars_, static_cast<std::size_t>(it - vars_.begin()));
    }
    if (accept("(")) {
      MultiPoly r = expr();
      if (!accept(")")) fail("expected ')'");
      return r;
    }
    if (t.kind == Token::End) fail("unexpected end of input");
    fail("unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

bool natural_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t k = s.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
    const std::string digits = s.substr(k);
    return std::make_pair(s.substr(0, k), digits.empty() ? -1L : std::stol(digits.substr(0, 9)));
  };
  const auto sa = split(a), sb = split(b);
  if (sa != sb) return sa < sb;
  return a < b;
}

}  // namespace

MultiPoly parse(const std::string& text, std::vector<std::string> vars) {
  auto toks = tokenize(text);
  if (vars.empty()) {
    std::set<std::string> seen;
    for (const auto& t : toks)
      if (t.kind == Token::Ident) seen.insert(t.text);
    vars.assign(seen.begin(), seen.end());
    std::sort(vars.begin(), vars.end(), natural_less);
  }
  return Parser(std::move(toks), std::move(vars)).run();
}

}  // namespace mukai::poly
