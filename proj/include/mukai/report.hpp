#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mukai/checked.hpp"

namespace mukai::report {

/// Where an expected value comes from: a published reference table, an
/// independent derivation (oracle, hand computation), or nowhere (a purely
/// computed, informational item).
enum class Source { Reference, Derived, Computed };

std::string to_string(Source s);
Source source_from_string(const std::string& s);

struct CheckItem {
  std::string check;
  std::string expected;
  std::string computed;
  bool pass = false;
  Source source = Source::Computed;
  std::string note;

  bool operator==(const CheckItem&) const = default;
};

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string case_id) : case_id_(std::move(case_id)) {}

  const std::string& case_id() const { return case_id_; }
  const std::vector<CheckItem>& items() const { return items_; }

  /// Passes iff expected == computed.
  void expect(std::string check, Int expected, Int computed, Source source, std::string note = {});
  void expect(std::string check, const std::string& expected, const std::string& computed, Source source,
              std::string note = {});
  void expect_true(std::string check, bool ok, Source source, std::string note = {});
  /// Informational item; always passes.
  void record(std::string check, const std::string& computed, std::string note = {});
  void add(CheckItem item) { items_.push_back(std::move(item)); }
  void append(const VerificationReport& other, const std::string& prefix = {});

  bool passed() const;
  std::size_t failures() const;

  nlohmann::ordered_json to_json() const;
  static VerificationReport from_json(const nlohmann::ordered_json& j);

  /// Human-readable fixed-width rendering.
  std::string to_table() const;

  bool operator==(const VerificationReport&) const = default;

 private:
  std::string case_id_;
  std::vector<CheckItem> items_;
};

/// Stable machine-readable document: {"status": ..., "reports": [...]}.
nlohmann::ordered_json to_document(const std::vector<VerificationReport>& reports);
std::vector<VerificationReport> from_document(const nlohmann::ordered_json& doc);
std::string serialize(const std::vector<VerificationReport>& reports);

}  // namespace mukai::report
