#include "ordstat/report.hpp"

#include <sstream>

namespace ordstat {

bool Report::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  for (const auto& item : items)
    if (!item.passed()) return false;
  return true;
}

void Report::add_check(std::string name, bool pass, std::string details) {
  checks.push_back({std::move(name), pass, std::move(details)});
}

nlohmann::json report_json(const Report& r) {
  nlohmann::json j;
  j["claim"] = r.claim;
  j["params"] = r.params;
  j["quantities"] = r.quantities;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
  j["checks"] = checks;
  j["witnesses"] = r.witnesses;
  j["notes"] = r.notes;
  j["passed"] = r.passed();
  if (!r.items.empty()) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& item : r.items) items.push_back(report_json(item));
    j["items"] = items;
  }
  return j;
}

namespace {

void render(const Report& r, std::ostringstream& os, const std::string& indent) {
  os << indent << "claim: " << r.claim << "\n";
  for (const auto& [k, v] : r.params) os << indent << "param " << k << ": " << v << "\n";
  for (const auto& [k, v] : r.quantities) os << indent << k << " = " << v << "\n";
  for (const auto& c : r.checks) {
    os << indent << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.details.empty()) os << ": " << c.details;
    os << "\n";
  }
  for (const auto& w : r.witnesses) os << indent << "witness: " << w << "\n";
  for (const auto& n : r.notes) os << indent << "note: " << n << "\n";
  for (const auto& item : r.items) render(item, os, indent + "  ");
  os << indent << "verdict: " << (r.passed() ? "PASS" : "FAIL") << "\n";
}

}  // namespace

std::string report_table(const Report& r) {
  std::ostringstream os;
  render(r, os, "");
  return os.str();
}

}  // namespace ordstat
