#pragma once

#include <map>

#include "siltkit/report.hpp"

namespace siltkit {

/* A parsed command line. The algebra source is one of the options
 * `fixture`, `standard`, or `algebra-text` (the file contents; file I/O
 * lives in the executable). Unknown verbs or options are rejected before
 * any computation. */
struct Command {
  std::string verb;
  std::map<std::string, std::string> options;
};

struct RunOutcome {
  int exit_code = 0;  // 0 computed result, 1 input error, 2 internal error
  Report report;
  std::string error;
};

RunOutcome run_command(const Command& cmd);

const std::vector<std::string>& cli_verbs();

}  // namespace siltkit
