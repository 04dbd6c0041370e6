#pragma once

#include <iosfwd>

namespace ftmd::cli {

enum ExitCode : int {
  kOk = 0,
  kMalformed = 1,
  kCapExceeded = 2,
  kPreconditionFailed = 3,
  kMismatch = 4,
};

/// Entry point behind the ftmd binary; argv[0] is the program name.
/// Reads FTMD_ORACLE_CAP for the default oracle cap.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ftmd::cli
