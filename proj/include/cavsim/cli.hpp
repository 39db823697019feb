#pragma once

#include <string>
#include <vector>

namespace cavsim {

/// Runs one experiment command. `args` excludes the program name.
/// Exit codes: 0 success, 1 validation failure (including an equivalence
/// check that finds a mismatch), 2 I/O failure.
int run_cli(const std::vector<std::string>& args);

}  // namespace cavsim
