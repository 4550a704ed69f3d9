#include <iostream>
#include <string>
#include <vector>

#include "loghilb/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return loghilb::cli::run_cli(args, std::cout, std::cerr);
}
