#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bicanon::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,             // success, or a true verdict
  kFalseVerdict = 1,   // predicate commands answering "no"
  kUsageError = 2,     // bad arguments, unreadable or malformed input
  kResourceError = 3,  // search budget exceeded
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bicanon::cli
