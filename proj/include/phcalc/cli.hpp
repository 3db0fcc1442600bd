#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace phcalc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,       // bad arguments or unparseable input
  kValidation = 2,  // input parsed but is not a filtration
  kInvariant = 3,   // a mathematical check failed
};

/// Runs `phcalc` with args[0] as the program name. "-" as a file argument
/// reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace phcalc::cli
