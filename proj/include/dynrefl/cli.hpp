#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dynrefl {

/// Exit codes: 0 pass, 1 counterexample or mismatch, 2 input error.
enum ExitCode { kPass = 0, kCounterexample = 1, kInputError = 2 };

/// Entry point of the `dynrefl` tool; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dynrefl
