#pragma once

#include <string>

#include "orlicz/config.hpp"

namespace orlicz {

/// Process exit codes shared by all commands.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNonConvergence = 2,
  kExitStrictViolation = 3,
};

/// Runs the condition checkers and probes; writes check_report.json into
/// out_dir. Returns kExitOk, or kExitStrictViolation when strict and any
/// checker reported "violated".
int run_check(const RunConfig& cfg, const std::string& out_dir, bool strict);

/// Dispatches to the solver selected by mode ("global-min", "mountain-pass",
/// "concave-convex"); writes report JSON and field CSV files into out_dir.
/// Returns kExitOk, kExitUsage for an incompatible family/mode pair, or
/// kExitNonConvergence when the solver fails.
int run_solve(const RunConfig& cfg, const std::string& mode,
              const std::string& out_dir);

/// Runs the two-solution search once per lambda in cfg.lambda_list; writes
/// sweep.csv. Returns kExitOk when at least one lambda yields a pair.
int run_sweep(const RunConfig& cfg, const std::string& out_dir);

}  // namespace orlicz
