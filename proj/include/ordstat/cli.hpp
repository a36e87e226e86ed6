#pragma once

#include <string>
#include <vector>

namespace ordstat {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Runs one command (arguments without the program name). Exit codes:
// 0 = all checks passed, 1 = a checked claim failed, 2 = usage or
// resource error.
CliResult run_cli(const std::vector<std::string>& args);

int main_cli(int argc, char** argv);

}  // namespace ordstat
