#include "mukai/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mukai::report {

std::string to_string(Source s) {
  switch (s) {
    case Source::Reference: return "reference";
    case Source::Derived: return "derived";
    case Source::Computed: return "computed";
  }
  return "computed";
}

Source source_from_string(const std::string& s) {
  if (s == "reference") return Source::Reference;
  if (s == "derived") return Source::Derived;
  if (s == "computed") return Source::Computed;
  throw std::invalid_argument("unknown source tag '" + s + "'");
}

void VerificationReport::expect(std::string check, Int expected, Int computed, Source source, std::string note) {
  expect(std::move(check), std::to_string(expected), std::to_string(computed), source, std::move(note));
}

void VerificationReport::expect(std::string check, const std::string& expected, const std::string& computed,
                                Source source, std::string note) {
  items_.push_back({std::move(check), expected, computed, expected == computed, source, std::move(note)});
}

void VerificationReport::expect_true(std::string check, bool ok, Source source, std::string note) {
  items_.push_back({std::move(check), "true", ok ? "true" : "false", ok, source, std::move(note)});
}

void VerificationReport::record(std::string check, const std::string& computed, std::string note) {
  items_.push_back({std::move(check), "", computed, true, Source::Computed, std::move(note)});
}

void VerificationReport::append(const VerificationReport& other, const std::string& prefix) {
  for (CheckItem item : other.items_) {
    item.check = prefix + item.check;
    items_.push_back(std::move(item));
  }
}

bool VerificationReport::passed() const {
  return std::all_of(items_.begin(), items_.end(), [](const CheckItem& i) { return i.pass; });
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(items_.begin(), items_.end(), [](const CheckItem& i) { return !i.pass; }));
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["case"] = case_id_;
  j["status"] = passed() ? "pass" : "fail";
  j["items"] = nlohmann::ordered_json::array();
  for (const CheckItem& i : items_) {
    nlohmann::ordered_json e;
    e["check"] = i.check;
    e["expected"] = i.expected;
    e["computed"] = i.computed;
    e["pass"] = i.pass;
    e["source"] = to_string(i.source);
    if (!i.note.empty()) e["note"] = i.note;
    j["items"].push_back(std::move(e));
  }
  return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::ordered_json& j) {
  VerificationReport r(j.at("case").get<std::string>());
  for (const auto& e : j.at("items")) {
    CheckItem i;
    i.check = e.at("check").get<std::string>();
    i.expected = e.at("expected").get<std::string>();
    i.computed = e.at("computed").get<std::string>();
    i.pass = e.at("pass").get<bool>();
    i.source = source_from_string(e.at("source").get<std::string>());
    if (e.contains("note")) i.note = e.at("note").get<std::string>();
    r.items_.push_back(std::move(i));
  }
  const std::string status = j.at("status").get<std::string>();
  if (status != (r.passed() ? "pass" : "fail")) throw std::invalid_argument("report status disagrees with its items");
  return r;
}

std::string VerificationReport::to_table() const {
  std::size_t wc = 5, we = 8, wv = 8;
  for (const CheckItem& i : items_) {
    wc = std::max(wc, i.check.size());
    we = std::max(we, i.expected.size());
    wv = std::max(wv, i.computed.size());
  }
  std::ostringstream os;
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  os << "== " << case_id_ << " : " << (passed() ? "PASS" : "FAIL") << " (" << items_.size() - failures() << "/"
     << items_.size() << ")\n";
  for (const CheckItem& i : items_) {
    os << "  [" << (i.pass ? "ok" : "FAIL") << "] " << pad(i.check, wc) << "  expected " << pad(i.expected, we)
       << "  computed " << pad(i.computed, wv) << "  " << to_string(i.source);
    if (!i.note.empty()) os << "  # " << i.note;
    os << "\n";
  }
  return os.str();
}

nlohmann::ordered_json to_document(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json doc;
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.passed(); });
  doc["status"] = ok ? "pass" : "fail";
  doc["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) doc["reports"].push_back(r.to_json());
  return doc;
}

std::vector<VerificationReport> from_document(const nlohmann::ordered_json& doc) {
  std::vector<VerificationReport> out;
  for (const auto& r : doc.at("reports")) out.push_back(VerificationReport::from_json(r));
  return out;
}

std::string serialize(const std::vector<VerificationReport>& reports) { return to_document(reports).dump(2) + "\n"; }

}  // namespace mukai::report
