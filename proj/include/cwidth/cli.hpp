#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cwidth/config.hpp"

namespace cwidth {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitWidthViolation = 2,
  kExitDegenerate = 3,
  kExitConfigError = 4,
};

/// Result of one subcommand: the JSON printed to stdout, files written, and
/// the exit code.
struct CommandOutput {
  Json json;
  std::vector<std::string> files;
  int exit_code = kExitOk;
  std::vector<std::string> warnings;
};

/// Width deviation above which commands exit with kExitWidthViolation.
inline constexpr double kCliWidthTolerance = 1e-6;

CommandOutput cmd_check(const SceneConfig& config);
CommandOutput cmd_measure(const SceneConfig& config);
/// With write_files, also emits <output>_critical.json (a config whose
/// support is the critical body), <output>_critical.obj and the two focal
/// branches <output>_critical_focal_{plus,minus}.obj.
CommandOutput cmd_shrink(const SceneConfig& config, bool write_files);
/// what: surface | focal | cross_section | cusps.
CommandOutput cmd_export(const SceneConfig& config, const std::string& what);
/// Averages the configured support over config.group (tetrahedral when
/// absent), optionally overriding the orientation, and reports the result.
CommandOutput cmd_symmetrize(const SceneConfig& config, const std::optional<Quaternion>& orientation,
                             bool write_files);

/// Full command-line entry point. Never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// JSON text with fixed formatting (two-space indent, trailing newline).
std::string dump_json(const Json& j);

}  // namespace cwidth
