// psgkit/cli.hpp - command-line front end
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace psgkit
{

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitOntology = 3,
  kExitIo = 4,
  kExitPartialCorpus = 5,
};

/// Runs the CLI on `args` (args[0] is the program name).
int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

}  // namespace psgkit
