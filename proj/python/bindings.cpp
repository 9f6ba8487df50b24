#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mukai/blowup.hpp"
#include "mukai/cli.hpp"
#include "mukai/cubics.hpp"
#include "mukai/sarkisov.hpp"
#include "mukai/schubert.hpp"
#include "mukai/triangle.hpp"

namespace py = pybind11;
using namespace mukai;

namespace {

py::dict table_dict(const blowup::BlowupTable& t) {
  py::dict d;
  d["basis"] = blowup::to_string(t.native);
  d["index"] = t.index;
  d["monomials"] = std::vector<Int>(t.monomials.begin(), t.monomials.end());
  d["c2_hh"] = t.c2_hh;
  d["c2_he"] = t.c2_he;
  d["c2_ee"] = t.c2_ee;
  d["c1c2_h"] = t.c1c2_h;
  d["c1c2_e"] = t.c1c2_e;
  return d;
}

// reports cross the boundary as their stable JSON text
std::string as_json(const std::vector<report::VerificationReport>& r) { return report::serialize(r); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "C++ core of the mukai package";

  m.def("tangent_chern", [](int n) { return schubert::to_triangle(schubert::tangent_chern(n).total()); },
        py::arg("n"), "Total Chern class of Gr(2,n) as a triangle of integers.");
  m.def("adjunct_linear_sections",
        [](int n, int k) { return schubert::to_triangle(schubert::adjunct_linear_sections(n, k).total()); },
        py::arg("n"), py::arg("k"), "Chern classes of a section of Gr(2,n) by k hyperplanes, as a triangle.");
  m.def("euler_characteristic_section", &schubert::euler_characteristic_section, py::arg("n"), py::arg("k"));

  m.def("blowup_table", [](int genus, const std::string& side) {
    const auto c = sarkisov::catalog(genus);
    if (side == "reverse") return table_dict(sarkisov::reverse_table(c));
    if (side == "forward") return table_dict(sarkisov::forward_table(c, sarkisov::solve_c2_dot_sigma(c)));
    throw std::invalid_argument("side must be 'forward' or 'reverse'");
  }, py::arg("genus"), py::arg("side") = "reverse");

  m.def("intersection_number", [](int genus, std::vector<std::pair<Int, Int>> divisors) {
    if (divisors.size() != 4) throw std::invalid_argument("need four divisors (a, b) meaning a*phi*L + b*D");
    const auto t = sarkisov::reverse_table(sarkisov::catalog(genus));
    std::vector<blowup::DivisorExpr> d;
    for (auto [a, b] : divisors) d.push_back(blowup::DivisorExpr::contracted(a, b));
    return blowup::intersection_number(t, d[0], d[1], d[2], d[3]);
  }, py::arg("genus"), py::arg("divisors"));

  m.def("table1", [] {
    std::vector<std::vector<Int>> rows;
    for (int g : sarkisov::catalog_genera()) {
      const auto r = sarkisov::computed_row(sarkisov::catalog(g));
      rows.push_back({g, r.sigma_degree, r.sigma_genus, r.f_degree, r.f_genus, r.f_singular, r.m22, r.m13, r.m04});
    }
    return rows;
  }, "Rows (g, d(Sigma), pi(Sigma), d(F), pi(F), #Sing F, (phi*L)^2D^2, (phi*L)D^3, D^4).");

  m.def("link_report", [](int genus) {
    const auto c = sarkisov::catalog(genus);
    std::optional<Int> c2;
    if (genus == 8) c2 = sarkisov::schubert_c2_dot_sigma_genus8();
    return as_json({sarkisov::verify_reverse(c), sarkisov::verify_forward(c, c2)});
  }, py::arg("genus"));

  m.def("cubic_report", [](const std::string& c, const std::string& check) { return as_json(cli::cubic_reports(c, check)); },
        py::arg("case"), py::arg("check") = "");
  m.def("report_all", [] { return as_json(cli::all_reports()); });

  m.def("quadric_rank", [](const std::string& g) { return cubics::quadric_rank(poly::parse(g)); }, py::arg("g"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command line; returns (exit status, stdout, stderr).");
}
