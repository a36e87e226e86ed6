#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace ordstat {

// One verified (or refuted) statement inside a report.
struct Check {
  std::string name;
  bool pass = false;
  std::string details;
};

// Structured result of a verification or scan. Every quantity is an exact
// integer or a rational rendered as "numerator/denominator"; identical
// inputs serialize to byte-identical documents.
struct Report {
  std::string claim;
  std::map<std::string, std::string> params;
  std::map<std::string, std::string> quantities;
  std::vector<Check> checks;
  std::vector<std::string> witnesses;  // failure evidence
  std::vector<std::string> notes;
  std::vector<Report> items;  // per-group entries of a scan

  bool passed() const;
  void add_check(std::string name, bool pass, std::string details = {});
};

nlohmann::json report_json(const Report& r);
std::string report_table(const Report& r);

}  // namespace ordstat
