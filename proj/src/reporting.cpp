#include "perspecta/reporting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "perspecta/matrix_io.hpp"

namespace perspecta {

namespace {

nlohmann::json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

nlohmann::json to_json(const CheckConfig& cfg) {
  return nlohmann::json{
      {"dims", cfg.dims},
      {"trials", cfg.trials},
      {"tol", cfg.tol},
      {"lambda_samples", cfg.lambda_samples},
      {"lambda_random", cfg.lambda_random},
      {"seed", cfg.seed},
      {"functions", cfg.functions},
      {"order", std::string(to_string(cfg.order))},
      {"cond_target", cfg.cond_target},
  };
}

nlohmann::json to_json(const TrialReport& report) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& cell : report.cells) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& fail : cell.failures) {
      nlohmann::json entry{
          {"trial", fail.trial},
          {"seed_path", fail.seed_path},
          {"margin", finite_or_null(fail.margin)},
      };
      if (!fail.detail.empty()) entry["detail"] = fail.detail;
      failures.push_back(std::move(entry));
    }
    cells.push_back(nlohmann::json{
        {"dim", cell.dim},
        {"f", cell.function_id},
        {"trials", cell.trials_run},
        {"worst_margin", finite_or_null(cell.worst_margin)},
        {"failures", std::move(failures)},
    });
  }
  nlohmann::json j{
      {"check_id", report.check_id},
      {"config", to_json(report.config)},
      {"cells", std::move(cells)},
      {"passed", report.passed},
  };
  if (!report.witnesses.empty()) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : report.witnesses) {
      nlohmann::json matrices = nlohmann::json::array();
      for (const auto& m : w.matrices) matrices.push_back(matrix_to_json(m));
      witnesses.push_back(nlohmann::json{
          {"seed_path", w.seed_path},
          {"dim", w.dim},
          {"f", w.function_id},
          {"lambda", w.lambda},
          {"margin", finite_or_null(w.margin)},
          {"reverified", w.reverified},
          {"matrices", std::move(matrices)},
      });
    }
    j["witnesses"] = std::move(witnesses);
  }
  return j;
}

nlohmann::json to_json(const RunReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& check : report.checks) checks.push_back(to_json(check));
  return nlohmann::json{
      {"version", report.version},
      {"config", to_json(report.config)},
      {"suite", report.suite},
      {"checks", std::move(checks)},
      {"passed", report.passed},
      {"wall_seconds", report.wall_seconds},
  };
}

void print_text_report(std::ostream& os, const RunReport& report) {
  os << "perspecta " << report.version << "  seed=" << report.config.seed
     << "  trials=" << report.config.trials << "  tol=" << report.config.tol
     << "  order=" << to_string(report.config.order) << "\n";
  for (const auto& check : report.checks) {
    double worst = std::numeric_limits<double>::infinity();
    std::size_t failures = 0;
    for (const auto& cell : check.cells) {
      if (std::isfinite(cell.worst_margin)) {
        worst = std::min(worst, cell.worst_margin);
      }
      failures += cell.failures.size();
    }
    char margin_buf[32];
    if (std::isfinite(worst)) {
      std::snprintf(margin_buf, sizeof margin_buf, "%.2e", worst);
    } else {
      std::snprintf(margin_buf, sizeof margin_buf, "n/a");
    }
    os << (check.passed ? "PASS " : "FAIL ");
    os.width(28);
    os.setf(std::ios::left, std::ios::adjustfield);
    os << check.check_id;
    os.unsetf(std::ios::adjustfield);
    os << " worst margin " << margin_buf;
    if (!check.witnesses.empty()) {
      os << "  witnesses " << check.witnesses.size();
    }
    if (failures > 0) {
      os << "  failures " << failures;
    }
    os << "\n";
  }
  char time_buf[32];
  std::snprintf(time_buf, sizeof time_buf, "%.2f", report.wall_seconds);
  os << "overall: " << (report.passed ? "PASS" : "FAIL") << "  ("
     << report.checks.size() << " checks, " << time_buf << " s)\n";
}

}  // namespace perspecta
