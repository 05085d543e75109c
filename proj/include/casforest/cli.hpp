#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace casforest::cli {

// Full command-line surface; args excludes the program name. Returns the
// process exit code: 0 success, 2 usage or input error, 1 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace casforest::cli
