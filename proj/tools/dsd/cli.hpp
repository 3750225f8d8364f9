#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dsd::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kUsageError = 2,
    kNumericError = 3,
};

/// Run the command line `args` (program name first). Tables go to `out` or to
/// files under --out; diagnostics go to `err`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dsd::cli
