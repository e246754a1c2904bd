#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "frobcx/transfer.hpp"

namespace frobcx::cli {

/// Process exit codes. Stable contract for scripts.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,     // bad flags or invalid values
  kGuard = 2,     // an iteration guard refused the request
  kMismatch = 3,  // engines disagree or a checked bound fails
};

enum class Format { kTable, kJson, kCsv };

std::string render_sequence(const ComplexityReport& report, Format format);

/// Runs the command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace frobcx::cli
