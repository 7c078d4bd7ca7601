#pragma once

#include "hamvol/json_io.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hamvol::cli {

// Outcome of one CLI invocation. exit_code is 0 on success, 2 when a theorem
// hypothesis is not met (NotApplicable / Unknown verdicts), 1 on errors;
// scripts partition sweeps on that distinction.
struct Report {
  std::string command;
  io::json inputs;
  io::json result;
  int exit_code = 1;
};

/// Dispatches one command line (without the program name) and writes either
/// the text rendering or, with --json, the full report JSON to `out`.
Report run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace hamvol::cli
