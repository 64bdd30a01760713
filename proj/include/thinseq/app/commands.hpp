#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "thinseq/app/config.hpp"
#include "thinseq/app/report.hpp"

namespace thinseq::app {

enum ExitCode : int { kOk = 0, kSuiteFailure = 1, kConfigError = 2, kNumericalFailure = 3 };

/// Command line overrides applied on top of the config file.
struct CliOptions {
  std::string config;  // empty = built-in defaults
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> jobs;
};

/// Loads the config and applies the overrides; throws ConfigError.
RunConfig resolve_config(const CliOptions& opts);

/// Per-N sweep over windows [N, M]. Numerical failures are recorded in the
/// row's status and the remaining cells are still computed.
SweepReport analyze(const RunConfig& cfg);

/// One (index, target) pair per row of a targets file.
struct TargetRow {
  std::size_t index = 0;
  cplx value;
};

/// Rows "index, re, im" (commas or whitespace); '#' starts a comment.
/// Throws ConfigError naming the offending row.
std::vector<TargetRow> parse_targets(const std::string& text);

/// The command entry points write their primary output to `out` (or to the
/// configured output path) and diagnostics to `err`, and return an exit code.
int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_interpolate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Resolves the config, dispatches on the verb and maps exceptions to exit codes.
int run_command(const std::string& verb, const CliOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace thinseq::app
