#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lchord {

/// Exit codes shared by every verb.
enum ExitCode : int {
  exit_ok = 0,
  exit_failure = 1,  // ledger row failed or the input was rejected
  exit_usage = 2,
  exit_parse = 3,
  exit_budget = 4,
};

/// Runs one command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace lchord
