#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "perspecta/regularity_suite.hpp"

namespace perspecta {

inline constexpr std::string_view kVersion = "0.1.0";

nlohmann::json to_json(const CheckConfig& cfg);
nlohmann::json to_json(const TrialReport& report);

/// Aggregate result of one `verify` invocation.
struct RunReport {
  std::string version{kVersion};
  CheckConfig config;
  std::vector<std::string> suite;  ///< check ids actually run
  std::vector<TrialReport> checks;
  bool passed = false;
  double wall_seconds = 0.0;
};

nlohmann::json to_json(const RunReport& report);

/// Human-readable rendering: one line per check with its worst margin in
/// scientific notation (3 significant digits).
void print_text_report(std::ostream& os, const RunReport& report);

}  // namespace perspecta
