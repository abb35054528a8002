#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rvs/json_io.hpp"

namespace rvs::cli {

enum ExitCode : int { kPass = 0, kMathFailure = 1, kUsage = 2 };

/// Resolved options shared by the subcommands; echoed into every report.
struct RunConfig {
  std::string command;
  std::string catalog;
  std::string graph_path;
  int radius = 4;
  std::uint64_t seed = 1;
  std::size_t samples = 5;
  double tol = kZeroTol;
  double nonzero_tol = kNonzeroTol;
  std::string flow = "bruhat";
  int loop_length = 8;
  std::string loop_base = "all";
  std::size_t search_budget = kDefaultSearchBudget;
  std::string braid_type = "A2";
  std::vector<double> ms = {3, 4, 5};
  std::size_t trials = 100;
  std::string kind;
  std::string json_path;
  std::string svg_path;

  Json to_json() const;
};

struct CommandResult {
  int exit_code = kPass;
  Json report;
  std::string text;
};

Graph resolve_graph(const RunConfig& cfg);

CommandResult cmd_classify(const RunConfig& cfg);
CommandResult cmd_region(const RunConfig& cfg);
CommandResult cmd_flow(const RunConfig& cfg);
CommandResult cmd_certify(const RunConfig& cfg);
CommandResult cmd_braid_table(const RunConfig& cfg);
CommandResult cmd_param_check(const RunConfig& cfg);
CommandResult cmd_render(const RunConfig& cfg);

/// Parses arguments (without the program name), dispatches, writes the
/// report files and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rvs::cli
