#pragma once

#include <string>

#include "gidx/config.hpp"

namespace gidx {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotElliptic = 2;
inline constexpr int kExitInconclusive = 3;
inline constexpr int kExitConfigError = 4;

// One finished command: the report text (JSON or CSV per the config) plus the
// process exit code. A nonzero code still carries a full report.
struct CommandOutput {
  int exit_code = kExitOk;
  std::string text;
};

CommandOutput cmd_ellipticity(const JobConfig& cfg);
CommandOutput cmd_index(const JobConfig& cfg);
CommandOutput cmd_sweep_s(const JobConfig& cfg);
CommandOutput cmd_nctorus(const JobConfig& cfg);
CommandOutput cmd_uniformize(const JobConfig& cfg);

// Full front end: parse `gidx <command> <config> [flags]`, run the command,
// write the report to stdout or --out. Returns the process exit code; errors
// are mapped to the exit-code contract (config trouble 4, not elliptic 2,
// everything else that kept a conclusion out of reach 3).
int run_cli(int argc, const char* const* argv);

}  // namespace gidx
