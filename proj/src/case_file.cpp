#include "mukai/case_file.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mukai::case_file {

using nlohmann::ordered_json;

namespace {

void require_keys(const ordered_json& j, const std::string& where, const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
  if (!j.is_object()) throw std::invalid_argument("case file: " + where + " must be an object");
  for (const auto& k : required)
    if (!j.contains(k)) throw std::invalid_argument("case file: missing field " + where + "." + k);
  for (const auto& [k, v] : j.items())
    if (!required.count(k) && !optional.count(k))
      throw std::invalid_argument("case file: unknown field " + where + "." + k);
}

Int integer(const ordered_json& j, const std::string& where, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw std::invalid_argument("case file: " + where + "." + key + " must be an integer");
  return v.get<Int>();
}

}  // namespace

sarkisov::LinkCase from_json(const ordered_json& j) {
  require_keys(j, "case", {"genus", "sigma", "f", "expected"}, {"sigma_name", "f_name"});
  sarkisov::LinkCase c;
  const Int g = integer(j, "case", "genus");
  if (g < 2 || g > 1000) throw std::invalid_argument("case file: genus out of range");
  c.genus = static_cast<int>(g);
  if (j.contains("sigma_name")) c.sigma_name = j.at("sigma_name").get<std::string>();
  if (j.contains("f_name")) c.f_name = j.at("f_name").get<std::string>();

  const auto& s = j.at("sigma");
  require_keys(s, "sigma", {"d", "pi", "ksq", "c2s"});
  c.sigma = {integer(s, "sigma", "d"), integer(s, "sigma", "pi"), integer(s, "sigma", "ksq"),
             integer(s, "sigma", "c2s"), 0};

  const auto& f = j.at("f");
  require_keys(f, "f", {"d", "pi", "ksq", "c2s", "delta"});
  c.f = {integer(f, "f", "d"), integer(f, "f", "pi"), integer(f, "f", "ksq"), integer(f, "f", "c2s"),
         integer(f, "f", "delta")};

  const auto& e = j.at("expected");
  require_keys(e, "expected", {"m22", "m13", "m04", "df", "pif", "nsing"});
  c.expected.m22 = integer(e, "expected", "m22");
  c.expected.m13 = integer(e, "expected", "m13");
  c.expected.m04 = integer(e, "expected", "m04");
  c.expected.f_degree = integer(e, "expected", "df");
  c.expected.f_genus = integer(e, "expected", "pif");
  c.expected.f_singular = integer(e, "expected", "nsing");
  c.expected.sigma_degree = c.sigma.degree;
  c.expected.sigma_genus = c.sigma.sectional_genus;
  return c;
}

ordered_json to_json(const sarkisov::LinkCase& c) {
  ordered_json j;
  j["genus"] = c.genus;
  if (!c.sigma_name.empty()) j["sigma_name"] = c.sigma_name;
  if (!c.f_name.empty()) j["f_name"] = c.f_name;
  j["sigma"] = {{"d", c.sigma.degree}, {"pi", c.sigma.sectional_genus}, {"ksq", c.sigma.k_squared},
                {"c2s", c.sigma.euler_number}};
  j["f"] = {{"d", c.f.degree},
            {"pi", c.f.sectional_genus},
            {"ksq", c.f.k_squared},
            {"c2s", c.f.euler_number},
            {"delta", c.f.double_points}};
  j["expected"] = {{"m22", c.expected.m22},      {"m13", c.expected.m13},     {"m04", c.expected.m04},
                   {"df", c.expected.f_degree},  {"pif", c.expected.f_genus}, {"nsing", c.expected.f_singular}};
  return j;
}

sarkisov::LinkCase parse(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("case file: ") + e.what());
  }
  try {
    return from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("case file: ") + e.what());
  }
}

sarkisov::LinkCase load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open case file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse(os.str());
}

std::string serialize(const sarkisov::LinkCase& c) { return to_json(c).dump(2) + "\n"; }

}  // namespace mukai::case_file
