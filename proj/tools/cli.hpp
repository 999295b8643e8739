#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ybx::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kResource = 3 };

// Runs one ybx invocation; args excludes the program name. "-" as a file
// argument reads from in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace ybx::cli
