#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xscale::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,     // bad flags or configuration
  kIoError = 2,   // unreadable/unwritable files, unsupported formats
  kPipeline = 3,  // failures inside the library
};

// Runs the xsr command line; args excludes the program name. Reports go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace xscale::cli
