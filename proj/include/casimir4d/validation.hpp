#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace casimir4d {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Measured quantities and the thresholds they were checked against.
  nlohmann::json measured = nlohmann::json::object();
  double seconds = 0.0;
};

struct ValidationReport {
  std::vector<CriterionResult> criteria;
  double wall_seconds = 0.0;

  bool all_passed() const;
  /// One "PASS"/"FAIL" line per criterion.
  std::string summary() const;
};

/// Runs the twelve acceptance criteria in order. Never throws for a failing
/// criterion: exceptions are caught and recorded as failures.
ValidationReport run_validation();

void to_json(nlohmann::json& j, const CriterionResult& c);
void to_json(nlohmann::json& j, const ValidationReport& r);

}  // namespace casimir4d
