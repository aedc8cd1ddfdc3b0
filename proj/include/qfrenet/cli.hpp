#pragma once

#include <string>
#include <vector>

namespace qfrenet {

// Exit codes: 0 ok, 1 validation failure, 2 bad input, 3 numerical failure,
// 4 I/O failure.
int run_cli(const std::vector<std::string>& args);

}  // namespace qfrenet
