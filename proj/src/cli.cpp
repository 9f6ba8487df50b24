#include "mukai/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "mukai/blowup.hpp"
#include "mukai/case_file.hpp"
#include "mukai/cubics.hpp"
#include "mukai/sarkisov.hpp"
#include "mukai/schubert.hpp"
#include "mukai/triangle.hpp"

namespace mukai::cli {

using report::Source;
using schubert::ChowClassGr;
using schubert::Triangle;
using poly::Point;

namespace {

const Triangle kGr26 = {{1}, {6, 18}, {16, 58, 67}, {26, 91, 120, 65}, {31, 90, 105, 60, 15}};
const Triangle kX14 = {{1}, {2, 4}, {2, 2, 5}, {2, 0, -2, 5}, {2, -2, 7, -18, 27}};

std::string row_string(const std::vector<Int>& row) {
  std::ostringstream os;
  for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
  return os.str();
}

void compare_triangle(VerificationReport& r, const std::string& what, const Triangle& expected, const Triangle& got) {
  for (std::size_t i = 0; i < std::max(expected.size(), got.size()); ++i)
    r.expect(what + " row " + std::to_string(i), i < expected.size() ? row_string(expected[i]) : "",
             i < got.size() ? row_string(got[i]) : "", Source::Reference);
}

ChowClassGr total(const schubert::ChernClassesGr& c) { return c.total(); }

}  // namespace

VerificationReport grassmannian_report(int n) {
  VerificationReport r("gr-chern n=" + std::to_string(n));
  const Triangle t = schubert::to_triangle(total(schubert::tangent_chern(n)));
  if (n == 6) {
    compare_triangle(r, "c(Gr(2,6))", kGr26, t);
  } else {
    for (std::size_t i = 0; i < t.size(); ++i) r.record("row " + std::to_string(i), row_string(t[i]));
  }
  // c_top counts the Schubert cells
  r.expect("Euler number = #cells", static_cast<Int>(n) * (n - 1) / 2,
           schubert::integrate(schubert::tangent_chern(n)[2 * (n - 2)]), Source::Derived);
  return r;
}

VerificationReport euler_report(int n, int sections) {
  VerificationReport r("euler n=" + std::to_string(n) + " sections=" + std::to_string(sections));
  const Int chi = schubert::euler_characteristic_section(n, sections);
  if (n == 6 && sections == 4)
    r.expect("chi", 12, chi, Source::Reference);
  else
    r.record("chi", std::to_string(chi));
  return r;
}

VerificationReport x14_report() {
  VerificationReport r("x14");
  const auto c = schubert::adjunct_linear_sections(6, 4);
  compare_triangle(r, "c(X14)", kX14, schubert::to_triangle(c.total()));
  r.expect("chi(X14) = int(2s4 + 5s22).s1^4", 12,
           schubert::integrate(schubert::multiply(ChowClassGr::sigma(6, 4) * 2 + ChowClassGr::sigma(6, 2, 2) * 5,
                                                  ChowClassGr::sigma(6, 1).pow(4))),
           Source::Reference);
  r.expect("chi(X14) via c4", 12, schubert::euler_characteristic_section(6, 4), Source::Reference);
  r.expect("deg X14 = int s1^8", 14, schubert::integrate(ChowClassGr::sigma(6, 1).pow(8)), Source::Derived);
  r.expect("c2(X14).L^2", 38,
           schubert::integrate(schubert::multiply(c[2], ChowClassGr::sigma(6, 1).pow(6))), Source::Derived,
           "c2(X14).L^2 = 2g+22");
  r.expect("c2(X14).s11", 14, schubert::pairing_on_section(6, 4, c[2], ChowClassGr::sigma(6, 1, 1)), Source::Derived);
  r.expect("s11.s11 on X14", 2,
           schubert::pairing_on_section(6, 4, ChowClassGr::sigma(6, 1, 1), ChowClassGr::sigma(6, 1, 1)),
           Source::Derived);
  r.expect("s11.s2 on X14", 3,
           schubert::pairing_on_section(6, 4, ChowClassGr::sigma(6, 1, 1), ChowClassGr::sigma(6, 2)),
           Source::Derived);
  return r;
}

namespace {

const std::set<std::string> kChecks = {"nodes", "planes", "lines", "cremona", "fibration"};

std::string ratio(std::size_t k, std::size_t n) { return std::to_string(k) + "/" + std::to_string(n); }

Point line_meets_hyperplane(const cubics::LinearSubspace& l, const Point& a) {
  auto dot = [&](const Point& p) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += a[i] * p[i];
    return s;
  };
  const Point& p0 = l.points()[0];
  const Point& p1 = l.points()[1];
  const mpq_class c0 = dot(p1), c1 = -dot(p0);
  Point q(p0.size());
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = c0 * p0[i] + c1 * p1[i];
  return cubics::normalize_point(q);
}

VerificationReport fibration_report(const std::string& id, const poly::MultiPoly& f,
                                    const std::vector<cubics::LinearSubspace>& lines) {
  VerificationReport r(id);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dist(-20, 20);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto& l = lines[k];
    const std::string p = lines.size() > 1 ? "line " + std::to_string(k + 1) + ": " : "";
    const bool member = cubics::double_line_membership(f, l);
    r.expect_true(p + "f in I_l^2", member, Source::Reference);
    if (!member) continue;
    const auto sym = cubics::residual_line_parametric(f, l);
    r.expect_true(p + "f|Pi = u^2 L exactly (symbolic lambda)", sym.exact, Source::Derived,
                  "remainder " + sym.remainder.to_string());
    r.expect(p + "deg of L in plane coordinates", 1, sym.residual.degree_in({0, 1, 2}), Source::Reference);
    r.expect(p + "order of L in plane coordinates", 1, sym.residual.order_in({0, 1, 2}), Source::Reference);
    int exact = 0;
    const int trials = 5;
    for (int t = 0; t < trials; ++t) {
      Point lam(f.nvars());
      do {
        for (auto& x : lam) x = mpq_class(dist(rng), 1 + (dist(rng) + 20) % 7);
      } while (std::all_of(lam.begin(), lam.end(), [](const mpq_class& x) { return x == 0; }) ||
               l.contains_point(lam));
      const auto res = cubics::residual_line(f, l, lam);
      if (res.exact && res.residual.degree() == 1 && res.residual.is_homogeneous()) ++exact;
    }
    r.expect(p + "exact residual line at random lambda", ratio(trials, trials), ratio(exact, trials), Source::Derived);
  }
  return r;
}

std::vector<VerificationReport> segre_reports(const std::string& check) {
  std::vector<VerificationReport> out;
  const auto eqs = cubics::segre_p5();
  const auto f4 = cubics::segre_p4();
  const auto s6 = cubics::symmetric_group_generators(6);
  if (check.empty() || check == "nodes") {
    VerificationReport r("cubic segre nodes");
    const auto orbit = cubics::orbit_closure(cubics::segre_seed_node(), s6);
    r.expect("S6-orbit of (1:1:1:-1:-1:-1)", 10, static_cast<Int>(orbit.size()), Source::Reference);
    std::size_t ok = 0;
    for (const auto& p : orbit)
      if (cubics::singular_on_intersection(eqs, p) && cubics::is_node(f4, cubics::segre_to_p4(p))) ++ok;
    r.expect("nodes verified", ratio(10, 10), ratio(ok, orbit.size()), Source::Reference,
             "singular in P5 and Hessian rank 4 in P4");
    r.expect_true("(1:0:0:0:0:-1) is smooth", !cubics::singular_on_intersection(eqs, {1, 0, 0, 0, 0, -1}),
                  Source::Derived);
    out.push_back(r);
  }
  if (check.empty() || check == "planes") {
    VerificationReport r("cubic segre planes");
    const auto orbit = cubics::orbit_closure(cubics::segre_seed_plane(), s6);
    r.expect("S6-orbit of x1+x2 = x3+x4 = x5+x6 = 0", 15, static_cast<Int>(orbit.size()), Source::Reference);
    std::size_t ok = 0;
    for (const auto& l : orbit)
      if (l.dimension() == 2 && cubics::contains_subspace(eqs[0], l) && cubics::contains_subspace(eqs[1], l) &&
          cubics::contains_subspace(f4, cubics::segre_to_p4(l)))
        ++ok;
    r.expect("planes verified", ratio(15, 15), ratio(ok, orbit.size()), Source::Reference);
    out.push_back(r);
  }
  if (check.empty() || check == "cremona") {
    auto d = cubics::cremona_transform(f4, cubics::segre_to_p4(cubics::segre_seed_node()));
    VerificationReport r("cubic segre cremona");
    r.append(d.checks);
    out.push_back(r);
  }
  if (check == "lines" || check == "fibration")
    throw std::invalid_argument("check '" + check + "' does not apply to the Segre cubic (no singular lines)");
  return out;
}

std::vector<VerificationReport> nine_nodal_reports(const std::string& check) {
  std::vector<VerificationReport> out;
  const auto z = cubics::nine_nodal_fourfold();
  const auto sym = cubics::nine_nodal_symmetries();
  const Point hyper = cubics::default_nine_nodal_hyperplane();
  const auto w3 = cubics::hyperplane_section(z, hyper);
  std::vector<cubics::LinearSubspace> lines, spaces;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      lines.push_back(cubics::nine_nodal_line(i, j));
      spaces.push_back(cubics::nine_nodal_space(i, j));
    }
  std::vector<Point> nodes;
  for (const auto& l : lines) nodes.push_back(w3.to_section(line_meets_hyperplane(l, hyper)));

  if (check.empty() || check == "lines") {
    VerificationReport r("cubic nine-nodal lines");
    r.expect("orbit of l_11", 9, static_cast<Int>(cubics::orbit_closure(lines[0], sym).size()), Source::Reference);
    std::size_t ok = 0;
    for (const auto& l : lines)
      if (l.dimension() == 1 && cubics::singular_along(z, l)) ++ok;
    r.expect("lines l_ij in Sing Z", ratio(9, 9), ratio(ok, lines.size()), Source::Reference,
             "partials vanish identically on each parametrized line");
    out.push_back(r);
  }
  if (check.empty() || check == "planes") {
    VerificationReport r("cubic nine-nodal planes");
    r.expect("orbit of M_11", 9, static_cast<Int>(cubics::orbit_closure(spaces[0], sym).size()), Source::Reference);
    std::size_t ok = 0, planes = 0;
    for (const auto& m : spaces) {
      if (m.dimension() == 3 && cubics::contains_subspace(z, m)) ++ok;
      const auto cut = cubics::LinearSubspace::from_forms(6, {m.forms()[0], m.forms()[1], hyper});
      if (cut.dimension() == 2 && cubics::contains_subspace(w3.restricted, w3.to_section(cut))) ++planes;
    }
    r.expect("three-spaces M_ij in Z", ratio(9, 9), ratio(ok, spaces.size()), Source::Reference);
    r.expect("planes M_ij cap H in W3", ratio(9, 9), ratio(planes, spaces.size()), Source::Reference);
    out.push_back(r);
  }
  if (check.empty() || check == "nodes") {
    VerificationReport r("cubic nine-nodal nodes");
    std::set<Point> distinct;
    std::size_t ok = 0;
    for (const auto& p : nodes) {
      distinct.insert(cubics::normalize_point(p));
      if (cubics::is_node(w3.restricted, p)) ++ok;
    }
    r.expect("distinct points H cap l_ij", 9, static_cast<Int>(distinct.size()), Source::Reference);
    r.expect("nodes verified", ratio(9, 9), ratio(ok, nodes.size()), Source::Reference,
             "W3 = Z cap {x1+2x2+3x3-5y1+7y2-11y3 = 0}");
    out.push_back(r);
  }
  if (check.empty() || check == "cremona") {
    auto d = cubics::cremona_transform(w3.restricted, nodes.front());
    VerificationReport r("cubic nine-nodal cremona");
    r.append(d.checks);
    out.push_back(r);
  }
  if (check.empty() || check == "fibration") {
    const auto sec = cubics::hyperplane_section(z, cubics::default_line_hyperplane());
    auto r = fibration_report("cubic nine-nodal fibration", sec.restricted, {sec.to_section(lines[0])});
    r.record("cubic", sec.restricted.to_string(), "section of Z by a hyperplane through l_11");
    out.push_back(r);
  }
  return out;
}

std::vector<VerificationReport> file_reports(const std::string& path, const std::string& check) {
  const auto c = cubics::load_cubic_file(path);
  const std::string id = "cubic " + path;
  std::vector<VerificationReport> out;
  if ((check == "nodes" || check == "cremona") && c.nodes.empty())
    throw std::invalid_argument("check '" + check + "' needs a 'node:' line");
  if ((check == "lines" || check == "fibration") && c.lines.empty())
    throw std::invalid_argument("check '" + check + "' needs a 'line:' line");
  if (check == "planes" && c.subspaces.empty()) throw std::invalid_argument("check 'planes' needs a 'subspace:' line");
  if ((check.empty() || check == "nodes") && !c.nodes.empty()) {
    VerificationReport r(id + " nodes");
    std::size_t ok = 0;
    for (const auto& p : c.nodes) ok += cubics::is_node(c.f, p) ? 1 : 0;
    r.expect("nodes verified", ratio(c.nodes.size(), c.nodes.size()), ratio(ok, c.nodes.size()), Source::Computed);
    out.push_back(r);
  }
  if ((check.empty() || check == "lines") && !c.lines.empty()) {
    VerificationReport r(id + " lines");
    std::size_t ok = 0;
    for (const auto& l : c.lines) ok += cubics::singular_along(c.f, l) ? 1 : 0;
    r.expect("singular lines verified", ratio(c.lines.size(), c.lines.size()), ratio(ok, c.lines.size()),
             Source::Computed);
    out.push_back(r);
  }
  if ((check.empty() || check == "planes") && !c.subspaces.empty()) {
    VerificationReport r(id + " planes");
    std::size_t ok = 0;
    for (const auto& l : c.subspaces) ok += cubics::contains_subspace(c.f, l) ? 1 : 0;
    r.expect("contained subspaces verified", ratio(c.subspaces.size(), c.subspaces.size()),
             ratio(ok, c.subspaces.size()), Source::Computed);
    out.push_back(r);
  }
  if ((check.empty() || check == "cremona") && !c.nodes.empty()) {
    VerificationReport r(id + " cremona");
    r.append(cubics::cremona_transform(c.f, c.nodes.front()).checks);
    out.push_back(r);
  }
  if ((check.empty() || check == "fibration") && !c.lines.empty()) out.push_back(fibration_report(id + " fibration", c.f, c.lines));
  return out;
}

}  // namespace

std::vector<VerificationReport> cubic_reports(const std::string& cubic_case, const std::string& check) {
  if (!check.empty() && !kChecks.count(check)) throw std::invalid_argument("unknown check '" + check + "'");
  if (cubic_case == "segre") return segre_reports(check);
  if (cubic_case == "nine-nodal") return nine_nodal_reports(check);
  return file_reports(cubic_case, check);
}

std::vector<VerificationReport> all_reports() {
  using Job = std::function<std::vector<VerificationReport>()>;
  std::vector<Job> jobs;
  jobs.push_back([] { return std::vector{grassmannian_report(6)}; });
  jobs.push_back([] { return std::vector{x14_report()}; });
  jobs.push_back([] { return std::vector{sarkisov::relations_roundtrip()}; });
  jobs.push_back([] { return std::vector{sarkisov::table1_report()}; });
  for (int g : sarkisov::catalog_genera()) {
    jobs.push_back([g] { return std::vector{sarkisov::verify_reverse(sarkisov::catalog(g))}; });
    jobs.push_back([g] { return std::vector{sarkisov::verify_forward(sarkisov::catalog(g), std::nullopt)}; });
  }
  for (const char* c : {"segre", "nine-nodal"})
    for (const auto& check : kChecks) {
      if (std::string(c) == "segre" && (check == "lines" || check == "fibration")) continue;
      jobs.push_back([c, check] { return cubic_reports(c, check); });
    }
  std::vector<std::future<std::vector<VerificationReport>>> futures;
  for (auto& j : jobs) futures.push_back(std::async(std::launch::async, j));
  std::vector<VerificationReport> out;
  for (auto& f : futures)
    for (auto& r : f.get()) out.push_back(std::move(r));
  std::sort(out.begin(), out.end(),
            [](const VerificationReport& a, const VerificationReport& b) { return a.case_id() < b.case_id(); });
  return out;
}

namespace {

std::string format_blowup(const std::string& title, const blowup::BlowupTable& t) {
  const bool p = t.native == blowup::DivisorBasis::PullbackExceptional;
  const std::string h = p ? "H" : "L", e = p ? "E" : "D";
  std::ostringstream os;
  os << title << " in the basis (" << (p ? "rho*H, E" : "phi*L, D") << "), c1 = " << t.index << h << " - " << e
     << "\n";
  const std::array<std::string, 5> names = {h + "^4", h + "^3" + e, h + "^2" + e + "^2", h + e + "^3", e + "^4"};
  for (std::size_t j = 0; j < 5; ++j) os << "  " << names[j] << " = " << t.monomials[j] << "\n";
  os << "  c2." << h << "^2 = " << t.c2_hh << "\n  c2." << h << e << " = " << t.c2_he << "\n  c2." << e
     << "^2 = " << t.c2_ee << "\n  c1c2." << h << " = " << t.c1c2_h << "\n  c1c2." << e << " = " << t.c1c2_e << "\n";
  return os.str();
}

void record_blowup(VerificationReport& r, const std::string& prefix, const blowup::BlowupTable& t) {
  const bool p = t.native == blowup::DivisorBasis::PullbackExceptional;
  const std::string h = p ? "H" : "L", e = p ? "E" : "D";
  const std::array<std::string, 5> names = {h + "^4", h + "^3" + e, h + "^2" + e + "^2", h + e + "^3", e + "^4"};
  for (std::size_t j = 0; j < 5; ++j) r.record(prefix + names[j], std::to_string(t.monomials[j]));
  r.record(prefix + "c2." + h + "^2", std::to_string(t.c2_hh));
  r.record(prefix + "c2." + h + e, std::to_string(t.c2_he));
  r.record(prefix + "c2." + e + "^2", std::to_string(t.c2_ee));
  r.record(prefix + "c1c2." + h, std::to_string(t.c1c2_h));
  r.record(prefix + "c1c2." + e, std::to_string(t.c1c2_e));
}

sarkisov::LinkCase resolve_case(const std::string& spec) {
  if (!spec.empty() && std::all_of(spec.begin(), spec.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    if (spec.size() > 3) throw std::invalid_argument("no link in the catalog for genus " + spec);
    return sarkisov::catalog(std::stoi(spec));
  }
  return case_file::load(spec);
}

std::optional<Int> forward_c2(const sarkisov::LinkCase& c) {
  if (c.genus == 8 && c.sigma.degree == 5) return sarkisov::schubert_c2_dot_sigma_genus8();
  return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for Mukai fourfolds, Sarkisov links and singular cubic threefolds", "mukai"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json-like"}));

  int n = 0, sections = 0, genus = 0;
  std::string case_spec, direction = "both", cubic_case, check;
  bool all = false;

  auto* gr = app.add_subcommand("gr-chern", "Chern classes of Gr(2,n) as a triangle");
  gr->add_option("--n", n, "n")->required()->check(CLI::Range(3, 40));
  auto* eu = app.add_subcommand("euler", "Euler number of a smooth linear section of Gr(2,n)");
  eu->add_option("--n", n, "n")->required()->check(CLI::Range(3, 40));
  eu->add_option("--sections", sections, "number of hyperplanes")->required()->check(CLI::NonNegativeNumber);
  auto* bt = app.add_subcommand("blowup-table", "Intersection tables of both blowups of a link");
  bt->add_option("--case", case_spec, "genus in {6,7,8,9} or a case file")->required();
  auto* t1 = app.add_subcommand("table1", "Invariants of the four links");
  auto* lk = app.add_subcommand("link", "Verify one link");
  lk->add_option("--genus", genus, "genus in {6,7,8,9}");
  lk->add_option("--case", case_spec, "case file instead of a catalog genus");
  lk->add_option("--direction", direction, "forward, reverse or both")
      ->check(CLI::IsMember({"forward", "reverse", "both"}));
  auto* cu = app.add_subcommand("cubic", "Checks on singular cubic threefolds");
  cu->add_option("--case", cubic_case, "segre, nine-nodal or a cubic file")->required();
  cu->add_option("--check", check, "nodes, planes, lines, cremona or fibration")
      ->check(CLI::IsMember({"nodes", "planes", "lines", "cremona", "fibration"}));
  auto* rp = app.add_subcommand("report", "Run every suite");
  rp->add_flag("--all", all, "all suites")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  const bool json = format == "json-like";
  std::vector<VerificationReport> reports;
  std::string text;
  try {
    if (gr->parsed()) {
      reports.push_back(grassmannian_report(n));
      text = schubert::format_triangle(schubert::to_triangle(schubert::tangent_chern(n).total()));
    } else if (eu->parsed()) {
      if (sections > 2 * (n - 2)) throw std::invalid_argument("more sections than dim Gr(2,n)");
      reports.push_back(euler_report(n, sections));
      text = std::to_string(schubert::euler_characteristic_section(n, sections)) + "\n";
    } else if (bt->parsed()) {
      const auto c = resolve_case(case_spec);
      const auto rev_t = sarkisov::reverse_table(c);
      const auto c2 = forward_c2(c).value_or(sarkisov::solve_c2_dot_sigma(c));
      const auto fwd_t = sarkisov::forward_table(c, c2);
      VerificationReport r("blowup-table g=" + std::to_string(c.genus));
      record_blowup(r, "P4 side: ", rev_t);
      r.record("c2(X).Sigma", std::to_string(c2), forward_c2(c) ? "Schubert calculus" : "solved from D^4");
      record_blowup(r, "X side: ", fwd_t);
      reports.push_back(r);
      text = format_blowup("Blowup of P4 along F", rev_t) +
             format_blowup("Blowup of X" + std::to_string(2 * c.genus - 2) + " along Sigma with c2(X).Sigma = " +
                               std::to_string(c2) + ",",
                           fwd_t);
    } else if (t1->parsed()) {
      std::vector<std::pair<int, sarkisov::Table1Row>> rows;
      for (int g : sarkisov::catalog_genera()) rows.emplace_back(g, sarkisov::computed_row(sarkisov::catalog(g)));
      reports.push_back(sarkisov::table1_report());
      text = sarkisov::format_table1(rows);
    } else if (lk->parsed()) {
      if (case_spec.empty() == (genus == 0)) throw std::invalid_argument("give exactly one of --genus and --case");
      const auto c = case_spec.empty() ? sarkisov::catalog(genus) : case_file::load(case_spec);
      if (direction != "forward") reports.push_back(sarkisov::verify_reverse(c));
      if (direction != "reverse") reports.push_back(sarkisov::verify_forward(c, forward_c2(c)));
    } else if (cu->parsed()) {
      reports = cubic_reports(cubic_case, check);
      for (const auto& r : reports)
        for (const auto& i : r.items())
          if (i.check.find("verified") != std::string::npos) {
            std::string what = i.check.substr(0, i.check.find(" verified"));
            text += i.computed + " " + what + " verified" + (i.pass ? "" : " (FAILED)") + "\n";
          }
    } else if (rp->parsed()) {
      reports = all_reports();
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const bool ok = std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.passed(); });
  if (json) {
    out << report::serialize(reports);
  } else {
    out << text;
    if (!lk->parsed() && !cu->parsed() && !rp->parsed()) {
      for (const auto& r : reports)
        if (!r.passed()) out << r.to_table();
    } else {
      for (const auto& r : reports) out << r.to_table();
      if (rp->parsed()) out << (ok ? "ALL PASS" : "FAILURES") << "\n";
    }
  }
  return ok ? 0 : 1;
}

}  // namespace mukai::cli
