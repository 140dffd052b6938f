#pragma once

#include <string>
#include <vector>

namespace secrecy {

// Exit codes: 0 success, 1 failed validation criteria, 2 configuration
// errors, 3 numerical singularities.
int run_cli(const std::vector<std::string>& args);

}  // namespace secrecy
