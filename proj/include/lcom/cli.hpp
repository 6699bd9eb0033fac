#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lcom/ground_truth.hpp"

namespace lcom {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 1,
  kExitInput = 2,
  kExitMismatch = 3,
};

struct CliHooks {
  // Metric used by `cases`; compute_all with default options when empty.
  MetricFn case_metric;
};

/// Runs the `lcom` command line. `args` excludes the program name. Reports
/// go to `out` (or the --out file), diagnostics and errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks = {});

}  // namespace lcom
