#pragma once

// Report serialization. JSON documents carry "schema_version": 1; the text
// form is one line per record with the same fields.

#include <string>
#include <vector>

#include <json.hpp>

#include "qcong/verify.hpp"

namespace qcong {

inline constexpr int kReportSchemaVersion = 1;

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

nlohmann::json to_json(const AlphaRecord& r, const std::string& family);
nlohmann::json to_json(const FamilyReport& r);
nlohmann::json to_json(const SuiteReport& r);

FamilyReport family_report_from_json(const nlohmann::json& j);
SuiteReport suite_report_from_json(const nlohmann::json& j);

/// {"schema_version": 1, "kind": "families", "passed": ..., "families": [...]}
nlohmann::json families_document(const std::vector<FamilyReport>& reports);

/// {"schema_version": 1, "kind": "suites", "passed": ..., "suites": [...]}
nlohmann::json suites_document(const std::vector<SuiteReport>& reports);

std::string to_text(const FamilyReport& r);
std::string to_text(const SuiteReport& r);

}  // namespace qcong
