#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qhopf::cli {

// args excludes the program name. Returns the process exit code:
// 0 success, 1 verification counterexample, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhopf::cli
