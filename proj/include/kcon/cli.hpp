#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kcon::cli {

// Exit codes of the kcon tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kHypothesisNotMet = 2,
  kViolation = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace kcon::cli
