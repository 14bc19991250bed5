#pragma once

#include <string>
#include <vector>

namespace pdda {

struct CliResult {
  int exit_code = 0;  // 0 pass/success, 1 fail, 2 error
  std::string out;
  std::string err;
};

// Full command-line front end, callable in-process for tests. `args` excludes
// the program name.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace pdda
