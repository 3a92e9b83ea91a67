#include <iostream>
#include <string>
#include <vector>

#include "odac/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return odac::run_cli(args, std::cout, std::cerr);
}
