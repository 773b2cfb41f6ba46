#include <iostream>
#include <vector>

#include "phinary/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return phinary::cli_run(args, std::cout, std::cerr);
}
