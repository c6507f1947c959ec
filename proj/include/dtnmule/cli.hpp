#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dtnmule {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitIo = 2,
};

/// Entry point for the `dtnmule` tool. `args` excludes the program name.
/// Subcommands: analyze, simulate, sweep-n, sweep-rtt, optimize, ingest.
/// Global flags: --config <path>, --seed <u64>, --output <csv|json>, --out <path>.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace dtnmule
