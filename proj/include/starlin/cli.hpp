#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starlin {

// Entry point shared by the starlin binary and the CLI tests.
// Exit codes: 0 success, 2 parse error, 3 precondition violation,
// 4 numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace starlin
