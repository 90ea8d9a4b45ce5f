#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxcoh::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitCheckFailed = 1,
  kExitParseError = 2,
  kExitBudget = 3,
};

/// Runs one command. args excludes the program name. The report goes to `out`
/// (or to --out PATH), diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splits on commas outside parentheses: "A3,I2(5)" -> {"A3", "I2(5)"}.
std::vector<std::string> split_list(const std::string& text);

}  // namespace coxcoh::cli
