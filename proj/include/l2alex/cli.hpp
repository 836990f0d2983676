#pragma once

// Command-line front end: compute | detect | audit | catalog.
// Factored as a library call so the test suite can drive it directly.
//
// Exit codes: 0 success, 2 parse error, 3 unsupported oracle,
// 4 numeric failure.

#include <ostream>
#include <string>
#include <vector>

namespace l2alex {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace l2alex
