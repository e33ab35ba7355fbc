#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperacyc::cli {

// Runs one CLI invocation; args exclude the program name.  Returns the process
// exit status: 0 for answered queries (positive or negative alike), 1 for
// usage, file, parse, or capacity errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperacyc::cli
