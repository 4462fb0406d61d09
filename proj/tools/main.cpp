#include <cstdio>
#include <string>
#include <vector>

#include "freestar/cli_impl.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  freestar::CliResult res = freestar::run_command(args);
  std::fputs(res.output.c_str(), stdout);
  return res.exit_code;
}
