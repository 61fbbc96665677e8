#include "qcong/report.hpp"

#include <sstream>

namespace qcong {

using nlohmann::json;

bool SuiteReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

json to_json(const AlphaRecord& r, const std::string& family) {
  json j;
  j["family"] = family;
  j["alpha"] = r.alpha;
  j["prime"] = r.prime;
  j["exponent"] = r.exponent;
  j["modulus"] = r.modulus.get_str();
  j["checked"] = r.checked;
  j["passed"] = r.passed;
  j["skipped"] = r.skipped;
  j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  j["min_valuation"] = r.min_valuation ? json(*r.min_valuation) : json(nullptr);
  return j;
}

json to_json(const FamilyReport& r) {
  json records = json::array();
  for (const auto& rec : r.records) records.push_back(to_json(rec, r.family));
  return {{"family", r.family}, {"partial", r.partial}, {"passed", r.passed()}, {"records", records}};
}

json to_json(const SuiteReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"details", c.details}});
  return {{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}};
}

FamilyReport family_report_from_json(const json& j) {
  FamilyReport r;
  r.family = j.at("family").get<std::string>();
  r.partial = j.at("partial").get<bool>();
  for (const auto& x : j.at("records")) {
    AlphaRecord a;
    a.alpha = x.at("alpha").get<unsigned>();
    a.prime = x.at("prime").get<unsigned>();
    a.exponent = x.at("exponent").get<std::int64_t>();
    a.modulus = Int(x.at("modulus").get<std::string>());
    a.checked = x.at("checked").get<std::int64_t>();
    a.passed = x.at("passed").get<bool>();
    a.skipped = x.at("skipped").get<bool>();
    if (!x.at("witness").is_null()) a.witness = x.at("witness").get<std::int64_t>();
    if (!x.at("min_valuation").is_null()) a.min_valuation = x.at("min_valuation").get<unsigned>();
    r.records.push_back(std::move(a));
  }
  return r;
}

SuiteReport suite_report_from_json(const json& j) {
  SuiteReport r;
  r.suite = j.at("suite").get<std::string>();
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), c.at("status").get<std::string>() == "pass",
                        c.at("details").get<std::string>()});
  }
  return r;
}

json families_document(const std::vector<FamilyReport>& reports) {
  json arr = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    arr.push_back(to_json(r));
    ok = ok && r.passed();
  }
  return {{"schema_version", kReportSchemaVersion}, {"kind", "families"}, {"passed", ok}, {"families", arr}};
}

json suites_document(const std::vector<SuiteReport>& reports) {
  json arr = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    arr.push_back(to_json(r));
    ok = ok && r.passed();
  }
  return {{"schema_version", kReportSchemaVersion}, {"kind", "suites"}, {"passed", ok}, {"suites", arr}};
}

std::string to_text(const FamilyReport& r) {
  std::ostringstream os;
  for (const auto& a : r.records) {
    os << r.family << " alpha=" << a.alpha << " modulus=" << a.prime << "^" << a.exponent << " checked=" << a.checked;
    if (a.skipped) {
      os << " SKIPPED (beyond coefficient budget)\n";
      continue;
    }
    os << " min_valuation=" << (a.min_valuation ? std::to_string(*a.min_valuation) : std::string("inf"));
    os << (a.passed ? " PASS" : " FAIL");
    if (a.witness) os << " witness n=" << *a.witness;
    os << "\n";
  }
  if (r.partial) os << r.family << " PARTIAL: some alpha levels exceed the budget\n";
  return os.str();
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << "[" << (c.passed ? "PASS" : "FAIL") << "] " << r.suite << ": " << c.name;
    if (!c.details.empty()) os << " -- " << c.details;
    os << "\n";
  }
  return os.str();
}

}  // namespace qcong
