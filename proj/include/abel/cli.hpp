#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abel {

// Exit codes: 0 success, 2 input/parse error, 3 backend mismatch,
// 4 resource budget exceeded, 1 internal failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace abel
