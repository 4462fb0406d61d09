#ifndef FREESTAR_CLI_IMPL_HPP
#define FREESTAR_CLI_IMPL_HPP

#include <string>
#include <vector>

namespace freestar {

// Exit codes: 0 success, 1 mathematical negative (e.g. non-member),
// 2 usage/parse error, 3 precondition violation.
struct CliResult {
  std::string output;  // one JSON document
  int exit_code = 0;
};

// Full command dispatch; args exclude the program name. Pure apart from
// reading --problem files, so the golden tests drive it directly.
CliResult run_command(const std::vector<std::string>& args);

}  // namespace freestar

#endif
