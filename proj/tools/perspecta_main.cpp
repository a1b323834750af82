#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "perspecta/matrix_io.hpp"
#include "perspecta/perspective.hpp"
#include "perspecta/reporting.hpp"

namespace {

using namespace perspecta;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

std::vector<int> parse_dims(const std::string& spec) {
  std::vector<int> dims;
  const auto dots = spec.find("..");
  if (dots != std::string::npos) {
    const int lo = std::stoi(spec.substr(0, dots));
    const int hi = std::stoi(spec.substr(dots + 2));
    if (hi < lo) throw ParseError("dims range must be ascending: " + spec);
    for (int d = lo; d <= hi; ++d) dims.push_back(d);
  } else {
    std::size_t start = 0;
    while (start <= spec.size()) {
      const auto comma = spec.find(',', start);
      const std::string tok =
          spec.substr(start, comma == std::string::npos ? std::string::npos
                                                        : comma - start);
      if (!tok.empty()) dims.push_back(std::stoi(tok));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  if (dims.empty()) throw ParseError("dims must not be empty: " + spec);
  return dims;
}

std::vector<std::string> split_commas(const std::vector<std::string>& in) {
  std::vector<std::string> out;
  for (const auto& item : in) {
    std::size_t start = 0;
    while (start <= item.size()) {
      const auto comma = item.find(',', start);
      const std::string tok =
          item.substr(start, comma == std::string::npos ? std::string::npos
                                                        : comma - start);
      if (!tok.empty()) out.push_back(tok);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

PDMatrix load_pd(const std::string& path) {
  return PDMatrix::from(load_matrix(path));
}

void write_or_print(const std::optional<std::string>& out,
                    const nlohmann::json& j) {
  if (out) {
    std::ofstream file(*out);
    if (!file) throw ParseError("cannot open output file: " + *out);
    file << j.dump(2) << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

struct EvalOptions {
  std::string a_path;
  std::string b_path;
  std::string function_id = "neg_log";
  std::string order = "weight_first";
  std::optional<std::string> out;
};

int run_eval(const EvalOptions& opt) {
  const ScalarFunction f = require_function(opt.function_id);
  const PerspectiveOrder order = order_from_string(opt.order);
  PDMatrix a = load_pd(opt.a_path);
  PDMatrix b = load_pd(opt.b_path);
  const PerspectiveResult result = perspective(f, a, b, order);
  nlohmann::json j{
      {"value", matrix_to_json(result.value)},
      {"inner_spectrum",
       std::vector<double>(result.inner_spectrum.begin(),
                           result.inner_spectrum.end())},
      {"order", std::string(to_string(result.order))},
  };
  write_or_print(opt.out, j);
  return kExitPass;
}

struct VerifyOptions {
  std::vector<std::string> suite{"all"};
  CheckConfig cfg;
  std::string dims_spec;
  std::vector<std::string> functions;
  std::optional<std::string> report_path;
  std::string format = "text";
  bool trials_given = false;
  bool dims_given = false;
};

int run_verify(const VerifyOptions& opt) {
  std::vector<std::string> selected = split_commas(opt.suite);
  if (selected.empty() ||
      (selected.size() == 1 && selected[0] == "all")) {
    selected = suite_check_ids();
  }

  RunReport run;
  run.config = opt.cfg;
  run.suite = selected;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& id : selected) {
    CheckConfig cfg = opt.cfg;
    // The control violation search has its own documented defaults:
    // a 5000-trial budget over dims 2..4, unless flags pin them.
    if ((id == "detect_violation_control" || id == "violation_control" ||
         id == "check_detect_violation_control")) {
      if (!opt.trials_given) cfg.trials = 5000;
      if (!opt.dims_given) cfg.dims = {2, 3, 4};
    }
    run.checks.push_back(run_check(id, cfg));
  }
  const auto stop = std::chrono::steady_clock::now();
  run.wall_seconds =
      std::chrono::duration<double>(stop - start).count();
  run.passed = true;
  for (const auto& check : run.checks) {
    if (!check.passed) run.passed = false;
  }

  if (opt.report_path) {
    std::ofstream file(*opt.report_path);
    if (!file) {
      throw ParseError("cannot open report file: " + *opt.report_path);
    }
    file << to_json(run).dump(2) << "\n";
  }
  if (opt.format == "json") {
    std::cout << to_json(run).dump(2) << "\n";
  } else {
    print_text_report(std::cout, run);
  }
  return run.passed ? kExitPass : kExitCheckFailure;
}

int run_catalog(const std::string& format, const std::string& classification) {
  std::vector<ScalarFunction> entries;
  for (const auto& f : catalog()) {
    if (!classification.empty() &&
        to_string(f.classification) != classification) {
      continue;
    }
    entries.push_back(f);
  }
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& f : entries) {
      j.push_back(nlohmann::json{
          {"id", f.id},
          {"classification", std::string(to_string(f.classification))},
          {"monotone", f.monotone},
          {"description", f.description},
      });
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& f : entries) {
      std::printf("%-10s %-28s %-9s %s\n", f.id.c_str(),
                  std::string(to_string(f.classification)).c_str(),
                  f.monotone ? "monotone" : "-", f.description.c_str());
    }
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "perspecta: non-commutative perspectives of operator convex "
      "functions on positive definite matrices, with a randomized "
      "verification suite"};
  app.require_subcommand(1);

  EvalOptions eval_opt;
  auto* eval_cmd = app.add_subcommand(
      "eval", "evaluate a perspective on a matrix pair from JSON files");
  eval_cmd->add_option("--a", eval_opt.a_path, "matrix file for A")
      ->required();
  eval_cmd->add_option("--b", eval_opt.b_path, "matrix file for B")
      ->required();
  eval_cmd->add_option("--f", eval_opt.function_id,
                       "catalog function id (see `catalog`)");
  eval_cmd->add_option("--order", eval_opt.order,
                       "weight_first | weight_second");
  std::string eval_out;
  auto* eval_out_opt =
      eval_cmd->add_option("--out", eval_out, "output file (default stdout)");

  VerifyOptions verify_opt;
  auto* verify_cmd = app.add_subcommand(
      "verify", "run randomized property checks and report margins");
  verify_cmd->add_option("--suite", verify_opt.suite,
                         "check ids, comma separated, or 'all'");
  auto* dims_opt = verify_cmd->add_option(
      "--dims", verify_opt.dims_spec, "dimension sweep, e.g. 2..6 or 2,4,8");
  auto* trials_opt = verify_cmd->add_option(
      "--trials", verify_opt.cfg.trials, "trials per (dim, function) cell");
  verify_cmd->add_option("--tol", verify_opt.cfg.tol,
                         "relative semidefinite-order tolerance");
  verify_cmd
      ->add_option("--seed", verify_opt.cfg.seed, "root seed for all draws")
      ->envname("PERSPECTA_SEED");
  std::string verify_order = "weight_first";
  verify_cmd->add_option("--order", verify_order,
                         "weight_first | weight_second");
  verify_cmd->add_option("--f", verify_opt.functions,
                         "restrict checks to these function ids");
  std::string report_path;
  auto* report_opt = verify_cmd->add_option(
      "--report", report_path, "write the full JSON report to this file");
  verify_cmd->add_option("--format", verify_opt.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string catalog_format = "text";
  std::string catalog_classification;
  auto* catalog_cmd =
      app.add_subcommand("catalog", "list the scalar function catalog");
  catalog_cmd->add_option("--format", catalog_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  catalog_cmd->add_option("--classification", catalog_classification,
                          "filter by classification");

  std::string mean_a, mean_b;
  std::string mean_out;
  auto* mean_cmd = app.add_subcommand(
      "mean", "geometric operator mean of two positive definite matrices");
  mean_cmd->add_option("--a", mean_a, "matrix file for A")->required();
  mean_cmd->add_option("--b", mean_b, "matrix file for B")->required();
  auto* mean_out_opt =
      mean_cmd->add_option("--out", mean_out, "output file (default stdout)");

  std::string entropy_a, entropy_b;
  std::string entropy_out;
  auto* entropy_cmd = app.add_subcommand(
      "entropy",
      "relative entropy Tr A log A - Tr A log B and the perspective trace");
  entropy_cmd->add_option("--a", entropy_a, "matrix file for A")->required();
  entropy_cmd->add_option("--b", entropy_b, "matrix file for B")->required();
  auto* entropy_out_opt = entropy_cmd->add_option(
      "--out", entropy_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval_cmd) {
      if (eval_out_opt->count() > 0) eval_opt.out = eval_out;
      return run_eval(eval_opt);
    }
    if (*verify_cmd) {
      if (dims_opt->count() > 0) {
        verify_opt.cfg.dims = parse_dims(verify_opt.dims_spec);
        verify_opt.dims_given = true;
      }
      verify_opt.trials_given = trials_opt->count() > 0;
      verify_opt.cfg.order = order_from_string(verify_order);
      verify_opt.cfg.functions = split_commas(verify_opt.functions);
      if (report_opt->count() > 0) verify_opt.report_path = report_path;
      validate(verify_opt.cfg);
      return run_verify(verify_opt);
    }
    if (*catalog_cmd) {
      return run_catalog(catalog_format, catalog_classification);
    }
    if (*mean_cmd) {
      PDMatrix a = load_pd(mean_a);
      PDMatrix b = load_pd(mean_b);
      PDMatrix g = geometric_mean(a, b);
      std::optional<std::string> out;
      if (mean_out_opt->count() > 0) out = mean_out;
      write_or_print(out, matrix_to_json(g.base()));
      return kExitPass;
    }
    if (*entropy_cmd) {
      PDMatrix a = load_pd(entropy_a);
      PDMatrix b = load_pd(entropy_b);
      nlohmann::json j{
          {"relative_entropy", relative_entropy(a, b)},
          {"perspective_trace", trace_perspective_neg_log(a, b)},
      };
      std::optional<std::string> out;
      if (entropy_out_opt->count() > 0) out = entropy_out;
      write_or_print(out, j);
      return kExitPass;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "numeric domain error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const Error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
