#include "mukai/cubics.hpp"

#include <algorithm>
#include <climits>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mukai::cubics {

using linalg::Matrix;
using report::Source;

namespace {

Matrix rows_matrix(std::size_t n, const std::vector<Point>& rows) {
  Matrix m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("linear subspace: vector has wrong length");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Point> canonical_rows(std::size_t n, const std::vector<Point>& rows) {
  std::vector<std::size_t> piv;
  const Matrix r = linalg::rref(rows_matrix(n, rows), &piv);
  std::vector<Point> out;
  for (std::size_t i = 0; i < piv.size(); ++i) out.push_back(r.row(i));
  return out;
}

std::vector<Point> complement(std::size_t n, const std::vector<Point>& rows) {
  return canonical_rows(n, linalg::nullspace(rows_matrix(n, rows)));
}

mpq_class dot(const Point& a, const Point& b) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<std::string> plain_params(std::size_t k) { return MultiPoly::numbered("t", 0, static_cast<int>(k)); }

/// x = Σ w_k basis[k]; nullopt if x is not in the span.
std::optional<Point> solve_combination(const std::vector<Point>& basis, const Point& x) {
  const std::size_t n = x.size(), k = basis.size();
  Matrix m(n, k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m(i, j) = basis[j][i];
    m(i, k) = x[i];
  }
  std::vector<std::size_t> piv;
  const Matrix r = linalg::rref(m, &piv);
  if (!piv.empty() && piv.back() == k) return std::nullopt;
  Point w(k);
  for (std::size_t i = 0; i < piv.size(); ++i) w[piv[i]] = r(i, k);
  return w;
}

/// Images of the ambient variables under z = Σ coeffs·basis with basis given as points.
std::vector<MultiPoly> span_images(std::size_t n, const std::vector<Point>& basis, const std::vector<MultiPoly>& coeffs) {
  std::vector<MultiPoly> images;
  const auto& ring = coeffs.front().variables();
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly zi(ring);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k][i] != 0) zi += coeffs[k] * basis[k][i];
    images.push_back(zi);
  }
  return images;
}

}  // namespace

LinearSubspace LinearSubspace::from_points(std::size_t n, const std::vector<Point>& points) {
  LinearSubspace l;
  l.n_ = n;
  l.points_ = canonical_rows(n, points);
  if (l.points_.empty()) throw std::invalid_argument("linear subspace: no nonzero spanning point");
  l.forms_ = complement(n, l.points_);
  return l;
}

LinearSubspace LinearSubspace::from_forms(std::size_t n, const std::vector<Point>& forms) {
  LinearSubspace l;
  l.n_ = n;
  l.forms_ = canonical_rows(n, forms);
  l.points_ = complement(n, l.forms_);
  if (l.points_.empty()) throw std::invalid_argument("linear subspace: forms cut out the empty set");
  return l;
}

LinearSubspace LinearSubspace::from_both(std::size_t n, const std::vector<Point>& points,
                                         const std::vector<Point>& forms) {
  const LinearSubspace a = from_points(n, points);
  for (const auto& f : forms)
    for (const auto& p : points)
      if (dot(f, p) != 0) throw std::invalid_argument("linear subspace: a form does not vanish on a spanning point");
  if (!(a == from_forms(n, forms)))
    throw std::invalid_argument("linear subspace: presentations have different dimensions");
  return a;
}

bool LinearSubspace::contains_point(const Point& p) const {
  return std::all_of(forms_.begin(), forms_.end(), [&](const Point& f) { return dot(f, p) == 0; });
}

std::vector<MultiPoly> LinearSubspace::parametrization(const std::vector<std::string>& params) const {
  if (params.size() != points_.size()) throw std::invalid_argument("parametrization: wrong number of parameters");
  std::vector<MultiPoly> t;
  for (std::size_t k = 0; k < params.size(); ++k) t.push_back(MultiPoly::variable(params, k));
  return span_images(n_, points_, t);
}

std::vector<MultiPoly> LinearSubspace::parametrization() const { return parametrization(plain_params(points_.size())); }

std::string LinearSubspace::to_string(const std::vector<std::string>& vars) const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (i) os << ", ";
    os << MultiPoly::linear(vars, forms_[i]).to_string() << " = 0";
  }
  os << "}";
  return os.str();
}

Point normalize_point(const Point& p) {
  auto it = std::find_if(p.begin(), p.end(), [](const mpq_class& x) { return x != 0; });
  if (it == p.end()) throw std::invalid_argument("projective point with all coordinates zero");
  const mpq_class lead = *it;
  Point q = p;
  for (auto& x : q) x /= lead;
  return q;
}

bool projectively_equal(const Point& a, const Point& b) { return normalize_point(a) == normalize_point(b); }

std::vector<MultiPoly> gradient(const MultiPoly& f) {
  std::vector<MultiPoly> g;
  for (std::size_t i = 0; i < f.nvars(); ++i) g.push_back(f.derivative(i));
  return g;
}

bool singular_at(const MultiPoly& f, const Point& p) {
  normalize_point(p);
  for (const auto& d : gradient(f))
    if (d.evaluate(p) != 0) return false;
  return true;
}

bool singular_on_intersection(const std::vector<MultiPoly>& eqs, const Point& p) {
  normalize_point(p);
  Matrix j(eqs.size(), p.size());
  for (std::size_t r = 0; r < eqs.size(); ++r) {
    if (eqs[r].evaluate(p) != 0) return false;
    for (std::size_t c = 0; c < p.size(); ++c) j(r, c) = eqs[r].derivative(c).evaluate(p);
  }
  return linalg::rank(j) < eqs.size();
}

Matrix hessian_at(const MultiPoly& f, const Point& p) {
  const std::size_t n = f.nvars();
  Matrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const MultiPoly di = f.derivative(i);
    for (std::size_t j = i; j < n; ++j) {
      h(i, j) = di.derivative(j).evaluate(p);
      h(j, i) = h(i, j);
    }
  }
  return h;
}

bool is_node(const MultiPoly& f, const Point& p) {
  // by Euler's relation the Hessian kills p, so rank n−1 is the affine maximum
  return singular_at(f, p) && linalg::rank(hessian_at(f, p)) + 1 == f.nvars();
}

bool singular_along(const MultiPoly& f, const LinearSubspace& l) {
  const auto par = l.parametrization();
  for (const auto& d : gradient(f))
    if (!d.substitute(par).is_zero()) return false;
  return true;
}

bool contains_subspace(const MultiPoly& f, const LinearSubspace& l) {
  if (l.ambient_vars() != f.nvars()) throw std::invalid_argument("contains_subspace: ambient mismatch");
  return f.substitute(l.parametrization()).is_zero();
}

int vanishing_order(const MultiPoly& f, const LinearSubspace& l) {
  const std::size_t n = f.nvars();
  if (l.ambient_vars() != n) throw std::invalid_argument("vanishing_order: ambient mismatch");
  if (f.is_zero()) return INT_MAX;
  // new coordinates y = A z with the first rows of A cutting out L
  const auto rows = linalg::complete_basis(l.forms(), n);
  const auto inv = linalg::inverse(Matrix::from_rows(rows));
  const auto ys = MultiPoly::numbered("y", 0, static_cast<int>(n));
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(MultiPoly::linear(ys, inv->row(i)));
  std::vector<std::size_t> cut(l.forms().size());
  std::iota(cut.begin(), cut.end(), 0);
  return f.substitute(images).order_in(cut);
}

Point permute(const Point& p, const Permutation& sigma) {
  Point q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q.at(sigma.at(i)) = p[i];
  return q;
}

LinearSubspace permute(const LinearSubspace& l, const Permutation& sigma) {
  std::vector<Point> forms;
  for (const auto& f : l.forms()) forms.push_back(permute(f, sigma));
  return LinearSubspace::from_forms(l.ambient_vars(), forms);
}

std::vector<Point> orbit_closure(const Point& seed, const std::vector<Permutation>& generators) {
  std::vector<Point> orbit = {normalize_point(seed)};
  std::set<Point> seen(orbit.begin(), orbit.end());
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (const auto& g : generators) {
      Point q = normalize_point(permute(orbit[k], g));
      if (seen.insert(q).second) orbit.push_back(q);
    }
  return orbit;
}

std::vector<LinearSubspace> orbit_closure(const LinearSubspace& seed, const std::vector<Permutation>& generators) {
  std::vector<LinearSubspace> orbit = {seed};
  std::set<std::vector<Point>> seen = {seed.forms()};
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (const auto& g : generators) {
      LinearSubspace q = permute(orbit[k], g);
      if (seen.insert(q.forms()).second) orbit.push_back(q);
    }
  return orbit;
}

std::vector<Permutation> symmetric_group_generators(std::size_t n) {
  Permutation swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 0);
  if (n >= 2) std::swap(swap[0], swap[1]);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return {swap, cycle};
}

Point HyperplaneSection::to_section(const Point& ambient) const {
  auto w = solve_combination(basis, ambient);
  if (!w) throw std::invalid_argument("point does not lie on the hyperplane");
  return *w;
}

LinearSubspace HyperplaneSection::to_section(const LinearSubspace& ambient) const {
  std::vector<Point> pts;
  for (const auto& p : ambient.points()) pts.push_back(to_section(p));
  return LinearSubspace::from_points(basis.size(), pts);
}

HyperplaneSection hyperplane_section(const MultiPoly& f, const Point& hyperplane) {
  if (hyperplane.size() != f.nvars()) throw std::invalid_argument("hyperplane_section: wrong number of coefficients");
  normalize_point(hyperplane);
  HyperplaneSection h;
  h.hyperplane = hyperplane;
  h.basis = LinearSubspace::from_forms(f.nvars(), {hyperplane}).points();
  const auto ws = MultiPoly::numbered("w", 0, static_cast<int>(h.basis.size()));
  std::vector<MultiPoly> t;
  for (std::size_t k = 0; k < ws.size(); ++k) t.push_back(MultiPoly::variable(ws, k));
  h.restricted = f.substitute(span_images(f.nvars(), h.basis, t));
  return h;
}

std::vector<MultiPoly> segre_p5() {
  const auto xs = MultiPoly::numbered("x", 1, 6);
  MultiPoly lin(xs), cub(xs);
  for (std::size_t i = 0; i < 6; ++i) {
    const auto x = MultiPoly::variable(xs, i);
    lin += x;
    cub += x.pow(3);
  }
  return {lin, cub};
}

MultiPoly segre_p4() {
  const auto xs = MultiPoly::numbered("x", 1, 5);
  std::vector<MultiPoly> images;
  MultiPoly sum(xs);
  for (std::size_t i = 0; i < 5; ++i) {
    images.push_back(MultiPoly::variable(xs, i));
    sum += images.back();
  }
  images.push_back(-sum);
  return segre_p5()[1].substitute(images);
}

Point segre_seed_node() { return {1, 1, 1, -1, -1, -1}; }

LinearSubspace segre_seed_plane() {
  return LinearSubspace::from_forms(6, {{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}});
}

Point segre_to_p4(const Point& p) {
  if (std::accumulate(p.begin(), p.end(), mpq_class(0)) != 0)
    throw std::invalid_argument("point is not on the hyperplane x1+..+x6 = 0");
  return Point(p.begin(), p.begin() + 5);
}

LinearSubspace segre_to_p4(const LinearSubspace& l) {
  std::vector<Point> pts;
  for (const auto& p : l.points()) pts.push_back(segre_to_p4(p));
  return LinearSubspace::from_points(5, pts);
}

MultiPoly nine_nodal_fourfold() {
  const std::vector<std::string> v = {"x1", "x2", "x3", "y1", "y2", "y3"};
  auto z = [&](std::size_t i) { return MultiPoly::variable(v, i); };
  return z(0) * z(1) * z(2) - z(3) * z(4) * z(5);
}

LinearSubspace nine_nodal_line(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3) throw std::out_of_range("nine_nodal_line: indices are 1..3");
  std::vector<Point> forms;
  for (int k = 1; k <= 3; ++k) {
    Point e(6);
    if (k != i) {
      e[static_cast<std::size_t>(k - 1)] = 1;
      forms.push_back(e);
    }
    Point f(6);
    if (k != j) {
      f[static_cast<std::size_t>(k + 2)] = 1;
      forms.push_back(f);
    }
  }
  return LinearSubspace::from_forms(6, forms);
}

LinearSubspace nine_nodal_space(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3) throw std::out_of_range("nine_nodal_space: indices are 1..3");
  Point e(6), f(6);
  e[static_cast<std::size_t>(i - 1)] = 1;
  f[static_cast<std::size_t>(j + 2)] = 1;
  return LinearSubspace::from_forms(6, {e, f});
}

std::vector<Permutation> nine_nodal_symmetries() {
  // S3 on the x's, S3 on the y's, and x_i <-> y_i (which sends the equation to its negative)
  return {{1, 0, 2, 3, 4, 5}, {1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 3, 5}, {0, 1, 2, 4, 5, 3}, {3, 4, 5, 0, 1, 2}};
}

Point default_nine_nodal_hyperplane() { return {1, 2, 3, -5, 7, -11}; }

Point default_line_hyperplane() { return {0, 2, -3, 0, 5, 7}; }

bool double_line_membership(const MultiPoly& f, const LinearSubspace& line) {
  if (line.dimension() != 1) throw std::invalid_argument("double_line_membership: subspace is not a line");
  return vanishing_order(f, line) >= 2;
}

namespace {

ResidualLine divide_out(MultiPoly restricted, std::vector<std::string> plane, std::vector<std::string> params) {
  ResidualLine r;
  r.plane_vars = std::move(plane);
  r.param_vars = std::move(params);
  const auto& ring = restricted.variables();
  const MultiPoly u2 = MultiPoly::variable(ring, 2).pow(2);
  auto [q, rem] = restricted.divide(u2);
  r.exact = rem.is_zero() && q * u2 == restricted;
  r.restricted = std::move(restricted);
  r.residual = std::move(q);
  r.remainder = std::move(rem);
  return r;
}

void require_double_line(const MultiPoly& f, const LinearSubspace& line) {
  if (line.ambient_vars() != f.nvars()) throw std::invalid_argument("residual_line: ambient mismatch");
  if (!f.is_homogeneous() || f.degree() != 3) throw std::invalid_argument("residual_line: f must be a cubic form");
  if (!double_line_membership(f, line))
    throw std::invalid_argument("residual_line: f is not singular along the line");
}

}  // namespace

ResidualLine residual_line(const MultiPoly& f, const LinearSubspace& line, const Point& lambda) {
  require_double_line(f, line);
  if (line.contains_point(lambda)) throw std::invalid_argument("residual_line: lambda lies on the line");
  const std::vector<std::string> plane = {"s", "t", "u"};
  std::vector<Point> basis = line.points();
  basis.push_back(lambda);
  std::vector<MultiPoly> c;
  for (std::size_t k = 0; k < 3; ++k) c.push_back(MultiPoly::variable(plane, k));
  return divide_out(f.substitute(span_images(f.nvars(), basis, c)), plane, {});
}

ResidualLine residual_line_parametric(const MultiPoly& f, const LinearSubspace& line) {
  require_double_line(f, line);
  const std::vector<std::string> ring = {"s", "t", "u", "a", "b", "c"};
  const auto full = linalg::complete_basis(line.points(), f.nvars());
  auto var = [&](std::size_t k) { return MultiPoly::variable(ring, k); };
  const std::vector<Point> spanning(full.begin(), full.begin() + 2);
  std::vector<MultiPoly> images = span_images(f.nvars(), spanning, {var(0), var(1)});
  // λ = a·v0 + b·v1 + c·v2
  const std::vector<Point> comp(full.begin() + 2, full.end());
  std::vector<MultiPoly> lam_coeffs;
  for (std::size_t k = 0; k < comp.size(); ++k) lam_coeffs.push_back(var(2) * var(3 + k));
  const auto lam = span_images(f.nvars(), comp, lam_coeffs);
  for (std::size_t i = 0; i < images.size(); ++i) images[i] += lam[i];
  return divide_out(f.substitute(images), {"s", "t", "u"}, {"a", "b", "c"});
}

Matrix gram_matrix(const MultiPoly& g) {
  if (!g.is_homogeneous() || (g.degree() != 2 && !g.is_zero()))
    throw std::invalid_argument("gram_matrix: not a quadratic form");
  const std::size_t n = g.nvars();
  Matrix m(n, n);
  for (const auto& [e, c] : g.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      m(idx[0], idx[0]) = c;
    } else {
      m(idx[0], idx[1]) = c / 2;
      m(idx[1], idx[0]) = c / 2;
    }
  }
  return m;
}

std::size_t quadric_rank(const MultiPoly& g) { return linalg::rank(gram_matrix(g)); }

CremonaData cremona_transform(const MultiPoly& f, const Point& p, std::optional<MultiPoly> g) {
  const std::size_t n = f.nvars();
  if (p.size() != n) throw std::invalid_argument("cremona_transform: point has wrong length");
  if (!f.is_homogeneous() || f.degree() != 3) throw std::invalid_argument("cremona_transform: f must be a cubic form");
  if (!singular_at(f, p)) throw std::invalid_argument("cremona_transform: p is not a singular point of f");

  CremonaData d;
  const auto& vars = f.variables();
  const LinearSubspace pt = LinearSubspace::from_points(n, {p});
  for (const auto& form : pt.forms()) d.linear_forms.push_back(MultiPoly::linear(vars, form));
  if (!g) {
    MultiPoly s(vars);
    for (const auto& l : d.linear_forms) s += l * l;
    g = s;
  }
  d.quadric = *g;
  const std::size_t rk = quadric_rank(d.quadric);
  if (rk != 4) throw std::invalid_argument("cremona_transform: quadric has rank " + std::to_string(rk) + ", not 4");
  if (vanishing_order(d.quadric, pt) < 2) throw std::invalid_argument("cremona_transform: quadric is not singular at p");
  for (const auto& l : d.linear_forms) d.components.push_back(d.quadric * l);
  d.components.push_back(f);

  auto& r = d.checks;
  r = VerificationReport("cremona");
  r.expect_true("p singular on V(f)", true, Source::Reference);
  const std::size_t hr = linalg::rank(hessian_at(f, p));
  if (hr + 1 == n)
    r.expect_true("p is an ordinary double point", true, Source::Reference, "Hessian rank " + std::to_string(hr));
  else
    r.record("p is an ordinary double point", "no", "warning: Hessian rank " + std::to_string(hr));
  r.expect("linear forms cutting out p", static_cast<Int>(n - 1), static_cast<Int>(d.linear_forms.size()),
           Source::Derived);
  r.expect("rank of g", 4, static_cast<Int>(rk), Source::Reference);
  r.expect_true("g in I_p^2", vanishing_order(d.quadric, pt) >= 2, Source::Reference);
  for (std::size_t i = 0; i + 1 < d.components.size(); ++i)
    r.expect("deg g*l" + std::to_string(i + 1), 3, d.components[i].degree(), Source::Derived,
             i == 0 ? "g quadratic and l_i linear give cubics, matching deg f; the published system calls them quartics"
                    : "");
  r.expect("deg f", 3, f.degree(), Source::Reference);
  r.expect_true("image of V(f) in the hyperplane y4 = 0", d.components.back() == f, Source::Reference);
  bool base = true;
  for (const auto& c : d.components) base = base && vanishing_order(c, pt) >= 2;
  r.expect_true("every component in I_p^2", base, Source::Derived);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(-9, 9);
  Point q(n);
  for (auto& x : q) x = dist(rng);
  Matrix jac(d.components.size(), n);
  for (std::size_t i = 0; i < d.components.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) jac(i, j) = d.components[i].derivative(j).evaluate(q);
  r.expect("Jacobian rank at a random point", static_cast<Int>(n), static_cast<Int>(linalg::rank(jac)),
           Source::Derived, "full rank means the map is dominant");
  return d;
}

}  // namespace mukai::cubics

namespace mukai::cubics {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

Point parse_point(const std::string& text, std::size_t n, int line_no) {
  std::istringstream in(text);
  Point p;
  std::string tok;
  while (in >> tok) {
    mpq_class q;
    if (q.set_str(tok, 10) != 0 || q.get_den() == 0)
      throw std::invalid_argument("cubic file line " + std::to_string(line_no) + ": bad coordinate '" + tok + "'");
    q.canonicalize();
    p.push_back(q);
  }
  if (p.size() != n)
    throw std::invalid_argument("cubic file line " + std::to_string(line_no) + ": expected " + std::to_string(n) +
                                " coordinates, got " + std::to_string(p.size()));
  normalize_point(p);
  return p;
}

std::vector<Point> parse_points(const std::string& text, std::size_t n, int line_no) {
  std::vector<Point> out;
  std::size_t start = 0;
  while (true) {
    const auto bar = text.find('|', start);
    out.push_back(parse_point(text.substr(start, bar == std::string::npos ? std::string::npos : bar - start), n, line_no));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return out;
}

}  // namespace

CubicFile parse_cubic_file(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::vector<std::string> vars;
  std::string f_text;
  std::vector<std::pair<std::string, std::pair<std::string, int>>> pending;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("cubic file line " + std::to_string(line_no) + ": expected 'key: value'");
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    if (key == "vars") {
      std::istringstream vs(value);
      std::string v;
      while (vs >> v) vars.push_back(v);
    } else if (key == "f") {
      if (!f_text.empty()) throw std::invalid_argument("cubic file: f given twice");
      f_text = value;
    } else if (key == "node" || key == "line" || key == "subspace") {
      pending.push_back({key, {value, line_no}});
    } else {
      throw std::invalid_argument("cubic file line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (f_text.empty()) throw std::invalid_argument("cubic file: missing 'f:' line");
  CubicFile c;
  c.f = poly::parse(f_text, vars);
  if (!c.f.is_homogeneous() || c.f.degree() != 3) throw std::invalid_argument("cubic file: f is not a cubic form");
  const std::size_t n = c.f.nvars();
  for (const auto& [key, v] : pending) {
    const auto& [value, no] = v;
    if (key == "node") {
      c.nodes.push_back(parse_point(value, n, no));
    } else {
      auto l = LinearSubspace::from_points(n, parse_points(value, n, no));
      (key == "line" ? c.lines : c.subspaces).push_back(l);
      if (key == "line" && l.dimension() != 1)
        throw std::invalid_argument("cubic file line " + std::to_string(no) + ": points do not span a line");
    }
  }
  return c;
}

CubicFile load_cubic_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open cubic file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_cubic_file(os.str());
}

}  // namespace mukai::cubics
